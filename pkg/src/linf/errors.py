"""Exceptions for operator-level computations."""

from hochschild.errors import CochainError


class NotTRBError(CochainError):
    """The operator does not satisfy the twisted Rota-Baxter identity."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
