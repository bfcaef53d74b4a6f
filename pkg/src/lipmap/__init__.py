"""Step-bounded integer vertex mappings of connected graphs.

A mapping assigns an integer to every vertex so that adjacent values
differ by at most M (exactly M in the strong variant) and some root
vertex carries 0.  The package computes maximum ranges, extends partial
prescriptions, solves fixed-range questions, and cross-checks
everything against a brute-force enumerator.
"""

from .errors import (BudgetExceededError, InputError, LipmapError,
                     PreconditionError)
from .graph import (UNREACHABLE, DistanceMatrix, Graph, all_pairs_distances,
                    bfs_distances, bipartition, diameter, is_clique_union,
                    is_connected, require_connected)
from .mappings import (FullMapping, LipschitzParams, check_prescription,
                       is_valid, is_widom_rowlinson, range_of, span_of,
                       strong_mapping_witness)
from .maxrange import max_range, max_range_strong, max_range_witness
from .extend import (ExtensionResult, FailureReason, extend_general,
                     extend_on_tree, extend_strong, is_extendable,
                     is_m_reachable, is_rooted)
from .range_extend import (FixedRangeResult, fixed_range_extend,
                           max_range_extend)
from .oracle import (EnumerationStats, brute_extendable,
                     count_monotonicity_check, enumerate_extensions,
                     enumerate_mappings, stats)
from .lhom import LHomInstance, build_instance, parse_instance, solve

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "InputError", "LipmapError", "PreconditionError",
    "UNREACHABLE", "DistanceMatrix", "Graph", "all_pairs_distances",
    "bfs_distances", "bipartition", "diameter", "is_clique_union",
    "is_connected", "require_connected",
    "FullMapping", "LipschitzParams", "check_prescription", "is_valid",
    "is_widom_rowlinson", "range_of", "span_of", "strong_mapping_witness",
    "max_range", "max_range_strong", "max_range_witness",
    "ExtensionResult", "FailureReason", "extend_general", "extend_on_tree",
    "extend_strong", "is_extendable", "is_m_reachable", "is_rooted",
    "FixedRangeResult", "fixed_range_extend", "max_range_extend",
    "EnumerationStats", "brute_extendable", "count_monotonicity_check",
    "enumerate_extensions", "enumerate_mappings", "stats",
    "LHomInstance", "build_instance", "parse_instance", "solve",
    "__version__",
]
