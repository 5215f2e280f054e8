"""Number-partitioning heuristics and their monotonicity properties."""

from .algos import (
    FfdPacking,
    LsTrace,
    MultifitResult,
    run_ffd,
    run_lpt,
    run_ls,
    run_multifit,
)
from .core import (
    DominationWitness,
    Instance,
    Partition,
    dominates,
    make_instance,
    max_sum,
    min_sum,
)
from .harness import (
    Perturbation,
    SearchConfig,
    check_count_monotone,
    check_multi_increase,
    check_value_monotone,
    search_anomalies,
)
from .oracle import Objective, dominates_bruteforce, ffd_classic, optimal_partition
from .precedence import DispatchPolicy, PrecedenceInstance, Schedule, makespan_delta, schedule

__version__ = "0.1.0"
