"""Exceptions raised by operator constructions."""

from hochschild.errors import CochainError
from linf.errors import NotTRBError


class NotInvertibleError(CochainError):
    """A matrix over QQ[D] has no inverse over QQ[D]."""

    def __init__(self, message: str, determinant: str = ""):
        super().__init__(message)
        self.determinant = determinant


class NotCocycleError(CochainError):
    """A cochain required to be closed is not."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


__all__ = ["NotTRBError", "NotInvertibleError", "NotCocycleError"]
