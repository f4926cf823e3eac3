"""Derived and twisted brackets on cochains U^(x n) -> T, Maurer-Cartan data and d_R."""

from .errors import NotTRBError
from .brackets import (
    BINARY_ANCHOR,
    TERNARY_ANCHOR,
    UCochain,
    derived_bracket,
    lift,
    restrict,
    ternary_bracket,
    untwisted,
)
from .maurer_cartan import (
    DR_ANCHOR,
    MC_ANCHOR,
    d_R,
    mc_residual,
    require_maurer_cartan,
    twisted_l1,
    twisted_l2,
    twisted_l3,
    twisted_mc,
)

__all__ = [
    "NotTRBError",
    "BINARY_ANCHOR",
    "TERNARY_ANCHOR",
    "UCochain",
    "derived_bracket",
    "lift",
    "restrict",
    "ternary_bracket",
    "untwisted",
    "DR_ANCHOR",
    "MC_ANCHOR",
    "d_R",
    "mc_residual",
    "require_maurer_cartan",
    "twisted_l1",
    "twisted_l2",
    "twisted_l3",
    "twisted_mc",
]
