"""Exceptions raised by the conformal layer."""


class ConformalError(Exception):
    """Base class for conformal-algebra errors."""


class SpaceMismatchError(ConformalError):
    """An argument, table or map does not fit the spaces it is used with."""


class NotAssociativeError(ConformalError):
    """Structure constants fail associativity."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
