"""Equitable colorings of bipartite graphs with ceil(delta/2) + 1 classes."""

from .backend import available_backends, default_backend, get_kernel
from .constants import (
    ConstantsResult,
    compute_constants,
    hypotheses_hold,
    parse_rational,
    tl_margin,
    tq_margin,
)
from .engine import (
    MODE_BEST_EFFORT,
    MODE_THEOREM,
    ColoringParameters,
    ConstructionTrace,
    Cover,
    FeasibilityReport,
    Infeasible,
    NormalizedForm,
    attempt_parameters,
    build_mixed_classes,
    capacity_term,
    choose_t,
    color_equitably,
    construct_cover,
    cover_pure,
    derive_parameters,
    feasibility,
    normalize,
    rebalance,
    split,
)
from .errors import (
    DegreeTooSmallError,
    DuplicateEdgeError,
    EquicolorError,
    ExhaustedBError,
    GraphFormatError,
    InfeasibleSplitError,
    InvalidEdgeError,
    NoBVertexError,
    OddCycleError,
    PreconditionViolation,
    SizeMismatchError,
    TooLargeError,
    ZetaTooSmallError,
)
from .generator import GenSpec, generate_bipartite
from .graph import (
    SIDE_A,
    SIDE_B,
    BipartiteGraph,
    RawGraph,
    build_graph,
    canonicalize_sides,
    raw_graph,
    two_color,
)
from .oracle import (
    VerificationReport,
    brute_chi_e,
    brute_equitable_k,
    brute_normal_forms,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
