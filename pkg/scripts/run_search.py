"""Run the greedy-genetic search and write the trajectory as CSV."""
import argparse
import csv
import sys

from zerosumfree import GroupParams, SearchConfig, evolve, pair_counting_bound, save_set

parser = argparse.ArgumentParser()
parser.add_argument("--m", type=int, default=4)
parser.add_argument("--n", type=int, default=5)
parser.add_argument("--seed", type=int, default=1)
parser.add_argument("--gens", type=int, default=200)
parser.add_argument("--pop", type=int, default=32)
parser.add_argument("--budget", type=float, default=600.0)
parser.add_argument("--out", help="save the best set as JSON")
args = parser.parse_args()

p = GroupParams(args.m, args.n)
cfg = SearchConfig(seed=args.seed, generations=args.gens, population_size=args.pop,
                   time_budget=args.budget)
report = evolve(p, cfg)
w = csv.writer(sys.stdout)
w.writerow(["generation", "best_size", "mean_fitness"])
w.writerows(report.history)
bound = pair_counting_bound(p).upper_bound if p.m == 4 else None
print(f"# best {report.best_size} (bound {bound}) in {report.elapsed:.1f}s", file=sys.stderr)
if args.out:
    save_set(report.best, args.out, {"generator": "evolve", "seed": args.seed})
