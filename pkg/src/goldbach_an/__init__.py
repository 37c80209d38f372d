"""Prime graphs of alternating groups and the strong binary Goldbach problem."""
from .errors import (
    GoldbachAnError,
    InternalConsistencyError,
    InvalidArgument,
    OutOfDomain,
    OutOfRange,
    ResourceLimitError,
    TheoremViolation,
)
from .partitions import CycleType, Spectrum, biprimary_class_count, enumerate_cycle_types, spectrum
from .primegraph import GraphDelta, PrimeGraph, build_by_criterion, build_by_spectrum, components, delta
from .primes import GoldbachPairSet, PrimeSieve, build_sieve, goldbach_pairs, prime_count, rosser_interval_holds
from .structure import SubgroupProfile, centralizer_pi_delta, dim_U, dim_U_tilde, subgroup_profile
from .theorems import TheoremAReport, edge_diff_formula, table_1, theorem_b, verify_theorem_a

__version__ = "0.1.0"
