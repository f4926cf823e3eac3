"""C[D]-linear maps between finite free modules, as matrices over QQ[D]."""

import logging
from typing import List, Sequence

from exactpoly import MPoly

from .errors import SpaceMismatchError
from .lambda_calculus import LambdaExpr

logger = logging.getLogger(__name__)


class ModuleMap:
    """
    Map ``source -> target`` with f(u_a) = sum_i matrix[i][a](D) e_i.

    The matrix has rank(target) rows and rank(source) columns; entries are
    MPoly over zero L-variables.  f(D x) = D f(x) holds structurally.
    """

    def __init__(self, source, target, matrix: Sequence[Sequence[MPoly]]):
        rows = [list(row) for row in matrix]
        if len(rows) != target.rank or any(len(row) != source.rank for row in rows):
            raise SpaceMismatchError(
                f"matrix shape does not match {target.name} x {source.name} "
                f"({target.rank} x {source.rank})"
            )
        for row in rows:
            for entry in row:
                if entry.nvars != 0:
                    raise SpaceMismatchError("module map entries must be polynomials in D only")
        self.source = source
        self.target = target
        self.matrix = rows

    @classmethod
    def identity(cls, space) -> "ModuleMap":
        return cls(space, space, [[MPoly.one() if i == j else MPoly.zero() for j in range(space.rank)] for i in range(space.rank)])

    @classmethod
    def zero(cls, source, target) -> "ModuleMap":
        return cls(source, target, [[MPoly.zero() for _ in range(source.rank)] for _ in range(target.rank)])

    def entry(self, i: int, a: int) -> MPoly:
        return self.matrix[i][a]

    def column(self, a: int, nvars: int = 0) -> LambdaExpr:
        return LambdaExpr(self.target, nvars, tuple(self.matrix[i][a].embed(nvars) for i in range(self.target.rank)))

    def apply(self, x: LambdaExpr) -> LambdaExpr:
        if x.space is not self.source:
            raise SpaceMismatchError(f"map from {self.source.name} applied to {x.space.name}")
        n = x.nvars
        out: List[MPoly] = [MPoly.zero(n) for _ in range(self.target.rank)]
        for a, c in enumerate(x.coeffs):
            if c.is_zero:
                continue
            for i in range(self.target.rank):
                entry = self.matrix[i][a]
                if not entry.is_zero:
                    out[i] = out[i] + c * entry.embed(n)
        return LambdaExpr(self.target, n, tuple(out))

    __call__ = apply

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self o inner."""
        if inner.target is not self.source:
            raise SpaceMismatchError(f"cannot compose {self.source.name} after {inner.target.name}")
        rows = []
        for i in range(self.target.rank):
            row = []
            for a in range(inner.source.rank):
                total = MPoly.zero()
                for k in range(self.source.rank):
                    total = total + self.matrix[i][k] * inner.matrix[k][a]
                row.append(total)
            rows.append(row)
        return ModuleMap(inner.source, self.target, rows)

    def _check_same_shape(self, other: "ModuleMap") -> None:
        if other.source is not self.source or other.target is not self.target:
            raise SpaceMismatchError("maps between different spaces")

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        self._check_same_shape(other)
        return ModuleMap(self.source, self.target, [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        self._check_same_shape(other)
        return ModuleMap(self.source, self.target, [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self) -> "ModuleMap":
        return self.scale(-1)

    def scale(self, factor) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [[a * factor for a in row] for row in self.matrix])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.source is other.source and self.target is other.target and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), tuple(tuple(r) for r in self.matrix)))

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self.matrix for entry in row)

    def max_degree(self) -> int:
        return max((entry.degree() for row in self.matrix for entry in row), default=-1)

    def rows_text(self) -> List[List[str]]:
        return [[str(entry) for entry in row] for row in self.matrix]
