"""Exact domination numbers, distance invariants, and lower-bound verification
for small connected graphs."""

from .bounds import (
    BOUND_AVERAGE_DISTANCE,
    BOUND_BOUNDARY_ECC,
    BOUND_DIAMETER,
    BOUND_TRIPLE,
    BoundCheck,
    BoundReport,
    TripleEquality,
    assemble_report,
    average_distance_lb,
    best_triple_lb,
    boundary_ecc_lb,
    diameter_lb,
    r_subset_bound_name,
    r_subset_lb,
    triple_equality_analysis,
)
from .distance import (
    BoundaryInfo,
    DistanceMatrix,
    all_pairs_distances,
    average_distance,
    boundary_and_set_ecc,
    wiener_index,
)
from .domination import (
    DominationResult,
    domination_with_all_min_sets,
    enumerate_min_dominating_sets,
    gamma_bruteforce_oracle,
    gamma_exact,
    is_dominating_set,
)
from .errors import (
    BadR,
    Disconnected,
    DomdistError,
    GraphInputError,
    InvalidGraph6,
    MalformedLine,
    NotAGammaSet,
    OrderTooSmall,
    SelfLoop,
    TooLarge,
    UnknownBound,
    VertexOutOfRange,
)
from .graphs import Graph, encode_graph6, parse_edgelist, parse_graph6
from .harness import (
    CorpusSummary,
    CounterexampleReport,
    VerifyConfig,
    counterexample_demo,
    find_tight_instances,
    iter_corpus,
    run_corpus_verify,
)
from .treelift import (
    LiftCheck,
    SpanningTreeLift,
    lift_gamma_set_to_spanning_tree,
    verify_lift,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_AVERAGE_DISTANCE",
    "BOUND_BOUNDARY_ECC",
    "BOUND_DIAMETER",
    "BOUND_TRIPLE",
    "BadR",
    "BoundCheck",
    "BoundReport",
    "BoundaryInfo",
    "CorpusSummary",
    "CounterexampleReport",
    "Disconnected",
    "DistanceMatrix",
    "DomdistError",
    "DominationResult",
    "Graph",
    "GraphInputError",
    "InvalidGraph6",
    "LiftCheck",
    "MalformedLine",
    "NotAGammaSet",
    "OrderTooSmall",
    "SelfLoop",
    "SpanningTreeLift",
    "TooLarge",
    "TripleEquality",
    "UnknownBound",
    "VertexOutOfRange",
    "VerifyConfig",
    "all_pairs_distances",
    "assemble_report",
    "average_distance",
    "average_distance_lb",
    "best_triple_lb",
    "boundary_and_set_ecc",
    "boundary_ecc_lb",
    "counterexample_demo",
    "diameter_lb",
    "domination_with_all_min_sets",
    "encode_graph6",
    "enumerate_min_dominating_sets",
    "find_tight_instances",
    "gamma_bruteforce_oracle",
    "gamma_exact",
    "is_dominating_set",
    "iter_corpus",
    "lift_gamma_set_to_spanning_tree",
    "parse_edgelist",
    "parse_graph6",
    "r_subset_bound_name",
    "r_subset_lb",
    "run_corpus_verify",
    "triple_equality_analysis",
    "verify_lift",
    "wiener_index",
]
