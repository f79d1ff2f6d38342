"""Path-TSP / Phi-TSP approximation toolkit with exact desk-scale oracles."""

from .baselines import (
    PhiAlgorithm,
    TspAlgorithm,
    christofides_tsp,
    get_phi,
    get_tsp,
    register_phi,
    register_tsp,
    seven_approx_phi,
    steiner_forest_2approx,
)
from .duals import (
    LaminarDual,
    LaminarFamily,
    build_laminar_dual,
    build_laminar_family,
    cuts_with_few_edges,
    solve_cut_packing,
    uncross,
)
from .errors import (
    InfeasibleError,
    MalformedMultisetError,
    NoMatchingError,
    NoTJoinError,
    ParseError,
    PhiTspError,
    PreconditionError,
    SemanticError,
    SizeLimitError,
    UncrossingError,
)
from .graphs import EdgeMultiSet, Quotient, Subgraph, WeightedGraph, as_length
from .instances import gen_random, parse_instance, parse_tour, write_instance, write_tour
from .interfaces import (
    FeasibilityReport,
    Interface,
    PhiInstance,
    canonical_key,
    check_feasibility,
    combine_partial,
    induce_interface,
    is_feasible,
    is_phi_tour,
)
from .joins import JoinResult, extract_t_join_within, min_weight_perfect_matching, shortest_t_join
from .oracle import (
    OracleResult,
    oracle_path_tsp,
    oracle_phi_opt,
    oracle_steiner_forest,
    oracle_t_joins,
    oracle_tsp,
)
from .reduction import (
    BoostParams,
    BoostSchedule,
    SolveReport,
    boost_once,
    boost_schedule,
    dp_guess,
    long_tjoin_algo,
    short_tjoin_algo,
    simple_phi,
    solve_path_tsp,
    solve_phi_tsp,
)

__version__ = "0.1.0"
