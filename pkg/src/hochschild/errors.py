"""Exceptions raised by cochain constructions."""

from conformal.errors import ConformalError


class CochainError(ConformalError):
    """Arity or slot mismatch in a cochain operation."""
