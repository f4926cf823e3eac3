"""Exceptions raised by the polynomial layer."""


class PolyError(Exception):
    """Base class for polynomial errors."""


class VariableCountError(PolyError):
    """Operands live over different numbers of L-variables."""

    def __init__(self, left: int, right: int):
        super().__init__(f"variable-count mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class PolyParseError(PolyError):
    """Polynomial text could not be parsed."""

    def __init__(self, text: str, reason: str, line: int = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"cannot parse polynomial {text!r}{where}: {reason}")
        self.text = text
        self.reason = reason
        self.line = line
