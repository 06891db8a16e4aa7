"""Edge-inducibility toolkit: induced-copy counting, fractional
independence with half-integral witnesses, blow-up constructions and
closed-form bounds, exact small-budget search, and numeric verification
of the entropy-method inequalities behind the bounds."""

__version__ = "0.1.0"

from .graph import Graph, Graph6Error, parse_graph6, parse_graph6_file, write_graph6
from .canon import (
    CanonicalForm,
    are_isomorphic,
    automorphism_order,
    canonical_form,
    canonical_label,
)
from .kernels import BACKEND, count_ordered, enumerate_ordered
from .counting import (
    CountSummary,
    GammaStats,
    InvalidTupleError,
    alpha_extension_edges,
    alpha_extensions,
    beta_embeddings,
    characterizes_cycle,
    count_induced,
    gamma_stats,
    is_well_ordered,
    validate_edge_tuple,
)
from .fracind import (
    ABCDecomposition,
    HalfIntegralWeighting,
    WeightingInvariantError,
    alpha_f,
    alpha_f_bruteforce,
    optimal_weighting,
)
from .blowups import (
    BlowupSpec,
    BoundValue,
    blow_up,
    bound_eval,
    effective_upper,
    lower_bound_construction,
    optimize_part_sizes,
)
from .search import (
    CeilingError,
    ResultCache,
    SandwichError,
    SearchResult,
    enumerate_m_edge_graphs,
    rho_exact,
    verify_sandwich,
)
from .entropy import (
    C6HypergraphReport,
    ClaimLedger,
    CopyDistribution,
    EmptySupportError,
    EntropyReport,
    c6_hypergraph_check,
    cycle_extension_ledger,
    cycle_path_shearer,
    drop_one_covers,
    full_tuple_identity,
    induced_cycles,
    is_capable,
    projection_entropy,
    verify_chain_shearer,
    verify_path_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
