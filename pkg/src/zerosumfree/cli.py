"""Command-line entry point: ``zsfree <command> ...``.

Exit codes: 0 success / set is free, 1 violation found, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .bounds import BoundInconsistency, gap_to_bound, pair_counting_bound
from .exact import branch_and_bound_max, exhaustive_max, export_ilp
from .group import GroupParams, InvalidInput
from .io import SetFileError, load_set, save_set
from .search import SearchConfig, evolve
from .sets import CONSTRUCTIONS, UnsupportedConstruction, density
from .verify import verify_pairwise


def _group_args(p):
    p.add_argument("--m", type=int, required=True, help="modulus")
    p.add_argument("--n", type=int, required=True, help="dimension")


def _params(args) -> GroupParams:
    return GroupParams(args.m, args.n)


def cmd_construct(args) -> int:
    H = CONSTRUCTIONS[args.method](_params(args))
    if args.out:
        save_set(H, args.out, {"generator": args.method})
    print(f"method: {args.method}")
    print(f"size: {len(H)}")
    print(f"density: {float(density(H))}")
    return 0


def cmd_verify(args) -> int:
    H = load_set(args.file, modulus=args.m or 4)
    r = verify_pairwise(H, workers=args.threads)
    print(f"size: {len(H)}")
    print(f"is_free: {str(r.is_free).lower()}")
    if r.witness is not None:
        x, y, z = r.witness.vectors()
        print(f"witness: {x} + {y} + {z} = 0 (mod {H.params.m})")
    print(f"pairs_checked: {r.pairs_checked}")
    print(f"pairs_per_sec: {r.pairs_per_sec:.3g}")
    return 0 if r.is_free else 1


def cmd_bound(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = pair_counting_bound(_params(args))
    print(f"group_order: {rep.group_order}")
    print(f"upper_bound: {rep.upper_bound}")
    print(f"achieved_by_construction: {str(rep.achieved_by_construction).lower()}")
    print(f"status: {rep.label}")
    return 0


def cmd_exact(args) -> int:
    params = _params(args)
    if args.engine == "exhaustive":
        r = exhaustive_max(params)
    else:
        r = branch_and_bound_max(params, node_limit=args.node_limit)
    print(f"max_size: {r.max_size}")
    print(f"status: {r.status}")
    print(f"nodes_explored: {r.nodes_explored}")
    print(f"witness_set: {json.dumps(r.witness_set.sorted().vectors(), separators=(',', ':'))}")
    return 0


def cmd_search(args) -> int:
    config = SearchConfig(
        seed=args.seed,
        population_size=args.pop,
        generations=args.gens,
        time_budget=args.budget,
        workers=args.threads,
    )
    report = evolve(_params(args), config)
    save_set(report.best, args.out, {"generator": "evolve", "seed": args.seed})
    report_path = Path(args.report) if args.report else Path(args.out).with_suffix(".report.json")
    report_path.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    print(f"best_size: {report.best_size}")
    print(f"elapsed: {report.elapsed:.2f}s")
    print(f"report: {report_path}")
    return 0


def cmd_export_ilp(args) -> int:
    with open(args.out, "w") as fh:
        nv, nc = export_ilp(_params(args), fh)
    print(f"variables: {nv}")
    print(f"constraints: {nc}")
    return 0


def cmd_stats(args) -> int:
    H = load_set(args.file, modulus=args.m or 4)
    d = density(H)
    print(f"size: {len(H)}")
    print(f"density: {float(d)} ({d.numerator}/{d.denominator})")
    try:
        gap, _ = gap_to_bound(H)
        print(f"gap_to_bound: {gap}")
    except BoundInconsistency as e:
        print(f"gap_to_bound: inconsistent ({e})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsfree", description="3-zero-sum-free subsets of (Z/mZ)^n"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an explicit construction")
    _group_args(p)
    p.add_argument("--method", choices=sorted(CONSTRUCTIONS), required=True)
    p.add_argument("--out", help="write the set as JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a set file for zero-sum triples")
    p.add_argument("file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--m", type=int, help="modulus for bare-list files (default 4)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="pair-counting upper bound")
    _group_args(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("exact", help="exact maximum for small groups")
    _group_args(p)
    p.add_argument("--engine", choices=["exhaustive", "bnb"], default="bnb")
    p.add_argument("--node-limit", type=int, default=10_000_000)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("search", help="hybrid greedy-genetic search")
    _group_args(p)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--pop", type=int, default=32)
    p.add_argument("--gens", type=int, default=200)
    p.add_argument("--budget", type=float, default=600.0, help="seconds")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--report", help="report path (default: OUT with .report.json)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export-ilp", help="write the triple ILP model in LP format")
    _group_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_ilp)

    p = sub.add_parser("stats", help="size, density and gap to the bound")
    p.add_argument("file")
    p.add_argument("--m", type=int, help="modulus for bare-list files (default 4)")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, UnsupportedConstruction, SetFileError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
