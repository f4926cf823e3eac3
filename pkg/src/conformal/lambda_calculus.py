"""
Lambda-expressions over a finite free C[D]-module and the multilinear
evaluation rule shared by products, actions and cochains.

A value in U[L1..Ln] is stored as a coefficient vector of MPoly over the
basis of U.  Every structure map (product, action, cochain) is stored only on
basis tuples; on general arguments it is expanded by sesquilinearity:

- an argument in an interior slot j with coefficient c(D) contributes
  c(-s_j), where s_j is the lambda-form attached to that slot;
- the argument in the last slot contributes c(D + s_1 + ... + s_{m-1}).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from exactpoly import MPoly

from .errors import SpaceMismatchError

logger = logging.getLogger(__name__)

Vector = Tuple[MPoly, ...]
Table = Dict[Tuple[int, ...], Vector]


@dataclass(frozen=True, eq=False)
class LambdaExpr:
    """
    Element of space[L1..L{nvars}], given by one coefficient per basis vector.

    Attributes:
        space: The algebra or bimodule the value lives in
        nvars: Number of free lambda variables
        coeffs: Coefficient polynomials, one per basis vector
    """

    space: object
    nvars: int
    coeffs: Vector

    def __post_init__(self):
        if len(self.coeffs) != self.space.rank:
            raise SpaceMismatchError(
                f"{len(self.coeffs)} coefficients for a space of rank {self.space.rank}"
            )
        for c in self.coeffs:
            if c.nvars != self.nvars:
                raise SpaceMismatchError(f"coefficient over {c.nvars} variables, expected {self.nvars}")

    @classmethod
    def zero(cls, space, nvars: int = 0) -> "LambdaExpr":
        return cls(space, nvars, tuple(MPoly.zero(nvars) for _ in range(space.rank)))

    @classmethod
    def basis(cls, space, index: int, nvars: int = 0) -> "LambdaExpr":
        if not 0 <= index < space.rank:
            raise SpaceMismatchError(f"basis index {index} outside rank {space.rank}")
        coeffs = tuple(MPoly.one(nvars) if k == index else MPoly.zero(nvars) for k in range(space.rank))
        return cls(space, nvars, coeffs)

    @classmethod
    def of(cls, space, coeffs: Sequence[MPoly]) -> "LambdaExpr":
        coeffs = tuple(coeffs)
        nvars = coeffs[0].nvars if coeffs else 0
        return cls(space, nvars, coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def _check(self, other: "LambdaExpr") -> None:
        if other.space is not self.space:
            raise SpaceMismatchError(f"{self.space.name} vs {other.space.name}")
        if other.nvars != self.nvars:
            raise SpaceMismatchError(f"expressions over {self.nvars} and {other.nvars} variables")

    def __add__(self, other: "LambdaExpr") -> "LambdaExpr":
        self._check(other)
        return LambdaExpr(self.space, self.nvars, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LambdaExpr") -> "LambdaExpr":
        self._check(other)
        return LambdaExpr(self.space, self.nvars, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LambdaExpr":
        return LambdaExpr(self.space, self.nvars, tuple(-c for c in self.coeffs))

    def scale(self, factor) -> "LambdaExpr":
        return LambdaExpr(self.space, self.nvars, tuple(c * factor for c in self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaExpr):
            return NotImplemented
        return self.space is other.space and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.space), self.nvars, self.coeffs))

    def map_coeffs(self, fn, nvars: int = None) -> "LambdaExpr":
        coeffs = tuple(fn(c) for c in self.coeffs)
        return LambdaExpr(self.space, self.nvars if nvars is None else nvars, coeffs)

    def embed(self, nvars: int, offset: int = 0) -> "LambdaExpr":
        """Move L_k to L_{k+offset} inside a ring with ``nvars`` variables."""
        return self.map_coeffs(lambda c: c.embed(nvars, offset), nvars)

    def reindex(self, nvars: int, positions: Sequence[int]) -> "LambdaExpr":
        return self.map_coeffs(lambda c: c.extend_vars(nvars, positions), nvars)

    def subst_L(self, j: int, form: MPoly) -> "LambdaExpr":
        return self.map_coeffs(lambda c: c.subst_L(j, form))

    def drop_vars(self, nvars: int) -> "LambdaExpr":
        return self.map_coeffs(lambda c: c.drop_vars(nvars), nvars)

    def to_text(self) -> str:
        pieces = []
        for name, c in zip(self.space.basis_names, self.coeffs):
            if c.is_zero:
                continue
            negative = c.is_constant and c.constant_value() < 0
            magnitude = -c if negative else c
            if magnitude == 1:
                body = name
            elif magnitude.is_constant:
                body = f"{magnitude}*{name}"
            else:
                body = f"({c})*{name}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.to_text()


Element = LambdaExpr


def element(space, coeffs: Sequence) -> LambdaExpr:
    """An element of ``space`` with coefficients in QQ[D] (ints and MPoly accepted)."""
    values = tuple(c if isinstance(c, MPoly) else MPoly.const(c, 0) for c in coeffs)
    return LambdaExpr(space, 0, values)


def zero_vector(rank: int, nvars: int) -> List[MPoly]:
    return [MPoly.zero(nvars) for _ in range(rank)]


def normalize_table(table: Table, arity: int, target_rank: int) -> Table:
    """Drop zero entries and freeze vectors; shapes are checked."""
    nvars = max(arity - 1, 0)
    cleaned: Table = {}
    for key, vector in table.items():
        key = tuple(key)
        if len(key) != arity:
            raise SpaceMismatchError(f"table key {key} has arity {len(key)}, expected {arity}")
        vector = tuple(vector)
        if len(vector) != target_rank:
            raise SpaceMismatchError(f"value at {key} has length {len(vector)}, expected {target_rank}")
        for c in vector:
            if c.nvars != nvars:
                raise SpaceMismatchError(f"value at {key} is over {c.nvars} variables, expected {nvars}")
        if any(not c.is_zero for c in vector):
            cleaned[key] = vector
    return cleaned


def table_degree(table: Table) -> int:
    """Largest total degree among the stored polynomials (-1 if empty)."""
    return max((c.degree() for vector in table.values() for c in vector), default=-1)


def apply_table(
    table: Table,
    arity: int,
    target,
    args: Sequence[LambdaExpr],
    slots: Sequence[MPoly],
    nvars: int,
) -> LambdaExpr:
    """
    Evaluate a basis-tuple table on general arguments.

    Args:
        table: Map from basis tuples to coefficient vectors over ``target``
        arity: Number of arguments
        target: Space of the values
        args: Arguments, all over ``nvars`` variables
        slots: One lambda-form per non-final slot, over ``nvars`` variables
        nvars: Variable count of the result

    Returns:
        The value as a LambdaExpr over ``nvars`` variables
    """
    if len(args) != arity:
        raise SpaceMismatchError(f"{len(args)} arguments for arity {arity}")
    if len(slots) != max(arity - 1, 0):
        raise SpaceMismatchError(f"{len(slots)} slot forms for arity {arity}")
    for a in args:
        if a.nvars != nvars:
            raise SpaceMismatchError(f"argument over {a.nvars} variables, expected {nvars}")

    result = zero_vector(target.rank, nvars)
    images = [MPoly.D(nvars)] + list(slots)

    if arity == 0:
        vector = table.get(())
        if vector is not None:
            result = [c.homomorphism(nvars, images) for c in vector]
        return LambdaExpr(target, nvars, tuple(result))

    total = MPoly.zero(nvars)
    for s in slots:
        total = total + s

    expanded: List[List[Tuple[int, MPoly]]] = []
    for j, a in enumerate(args):
        terms = []
        for index, c in enumerate(a.coeffs):
            if c.is_zero:
                continue
            if j < arity - 1:
                terms.append((index, c.subst_D(-slots[j])))
            else:
                terms.append((index, c.shift_D(total)))
        if not terms:
            return LambdaExpr(target, nvars, tuple(result))
        expanded.append(terms)

    mapped: Dict[Tuple[int, ...], List[MPoly]] = {}
    for combo in itertools.product(*expanded):
        key = tuple(index for index, _ in combo)
        vector = table.get(key)
        if vector is None:
            continue
        if key not in mapped:
            mapped[key] = [c.homomorphism(nvars, images) for c in vector]
        weight = MPoly.one(nvars)
        for _, c in combo:
            weight = weight * c
        for k, entry in enumerate(mapped[key]):
            if not entry.is_zero:
                result[k] = result[k] + weight * entry
    return LambdaExpr(target, nvars, tuple(result))


def slot_form(slot_var: int, nvars: int) -> MPoly:
    if not 1 <= slot_var <= nvars:
        raise SpaceMismatchError(f"slot variable L{slot_var} exceeds {nvars} variables")
    return MPoly.L(slot_var, nvars)
