"""Construct, verify, bound and search for 3-zero-sum-free subsets of (Z/mZ)^n."""
from .bounds import BoundReport, gap_to_bound, pair_counting_bound
from .exact import ExactResult, branch_and_bound_max, exhaustive_max, export_ilp
from .group import GroupParams, InvalidInput, add, decode, encode, enumerate_group, neg
from .io import load_set, save_set
from .search import SearchConfig, SearchReport, evolve, greedy_build, mutate, priority_score, repair
from .sets import (
    VectorSet,
    build_first_coord_odd,
    build_odd_box,
    build_odd_weight,
    density,
)
from .verify import (
    BlockedTable,
    VerifyResult,
    Witness,
    blocked_table,
    count_violations,
    verify_naive_oracle,
    verify_pairwise,
)

__version__ = "0.1.0"
