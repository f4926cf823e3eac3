"""Conformal Hochschild cochains, insertion, the Gerstenhaber bracket and the differential."""

from .errors import CochainError
from .cochain import (
    Cochain,
    compose_at,
    gerstenhaber,
    insertion,
    left_action_cochain,
    product_cochain,
    right_action_cochain,
)
from .differential import COCYCLE_ANCHOR, hochschild_delta, is_two_cocycle, source_algebra


def evaluate(f: Cochain, args, var_base: int = 1):
    """Evaluate a cochain on elements, slot j carrying L_(var_base + j - 1)."""
    return f.evaluate(args, var_base)


__all__ = [
    "CochainError",
    "Cochain",
    "compose_at",
    "gerstenhaber",
    "insertion",
    "left_action_cochain",
    "product_cochain",
    "right_action_cochain",
    "COCYCLE_ANCHOR",
    "hochschild_delta",
    "is_two_cocycle",
    "source_algebra",
    "evaluate",
]
