"""Lower and upper bounds on the concurrence of multipartite quantum states."""

from .bounds import (
    BoundReport,
    CutBounds,
    b1,
    b2,
    b3,
    bounds_eq13,
    cut_bounds,
    lower_theorem2,
    pure_c2,
    pure_cn,
    report,
    upper_eq14,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .partition import Cut, enumerate_cuts, enumerate_subsets
from .qstate import (
    MultipartiteState,
    PureState,
    bipartite_view,
    dct_state,
    ghz,
    partial_trace,
    partial_transpose,
    realign,
    validate,
    white_noise_mix,
)

__version__ = "0.1.0"
