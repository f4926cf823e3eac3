"""
Exact rational polynomial arithmetic in D (for the derivation) and L1..Ln
(for the lambda variables).
"""

from .errors import PolyError, VariableCountError, PolyParseError
from .mpoly import (
    MPoly,
    Rat,
    rat,
    poly_ring,
    add,
    mul,
    subst_L,
    shift_D,
    extend_vars,
    parse_mpoly,
    format_mpoly,
)

__all__ = [
    "PolyError",
    "VariableCountError",
    "PolyParseError",
    "MPoly",
    "Rat",
    "rat",
    "poly_ring",
    "add",
    "mul",
    "subst_L",
    "shift_D",
    "extend_vars",
    "parse_mpoly",
    "format_mpoly",
]
