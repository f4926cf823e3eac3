"""
Conformal algebras and bimodules given by structure constants over QQ[D, L1].

``e_i (L1) e_j = sum_k S[(i, j)][k](D, L1) e_k`` for an algebra, and the
analogous tables ``left[(i, a)]`` for e_i (L1) u_a and ``right[(a, i)]`` for
u_a (L1) e_i on a bimodule.  Indices are 0-based internally.
"""

import logging
from typing import List, Optional, Sequence

from exactpoly import MPoly, Rat, rat

from .errors import NotAssociativeError, SpaceMismatchError
from .lambda_calculus import (
    LambdaExpr,
    Table,
    apply_table,
    normalize_table,
    slot_form,
    table_degree,
)

logger = logging.getLogger(__name__)


def _default_names(prefix: str, rank: int) -> List[str]:
    return [f"{prefix}{i + 1}" for i in range(rank)]


class ConformalAlgebra:
    """Finite free C[D]-module with a lambda-product given on basis pairs."""

    def __init__(
        self,
        rank: int,
        product: Table,
        basis_names: Optional[Sequence[str]] = None,
        name: str = "T",
    ):
        if rank < 0:
            raise SpaceMismatchError(f"negative rank {rank}")
        self.rank = rank
        self.name = name
        self.basis_names = list(basis_names) if basis_names else _default_names("e", rank)
        if len(self.basis_names) != rank:
            raise SpaceMismatchError(f"{len(self.basis_names)} basis names for rank {rank}")
        for key in product:
            if any(not 0 <= i < rank for i in key):
                raise SpaceMismatchError(f"product index {key} outside rank {rank}")
        self.product = normalize_table(product, 2, rank)
        self.validated = False

    def structure_constant(self, i: int, j: int, k: int) -> MPoly:
        vector = self.product.get((i, j))
        return vector[k] if vector else MPoly.zero(1)

    def max_degree(self) -> int:
        return table_degree(self.product)

    def multiply(self, a: LambdaExpr, b: LambdaExpr, form: MPoly) -> LambdaExpr:
        """a_(form) b for an arbitrary lambda-form attached to the product."""
        if a.space is not self or b.space is not self:
            raise SpaceMismatchError(f"product of {a.space.name} and {b.space.name} in {self.name}")
        return apply_table(self.product, 2, self, [a, b], [form], a.nvars)

    def __repr__(self) -> str:
        return f"ConformalAlgebra({self.name}, rank={self.rank})"


class ConformalBimodule:
    """Finite free C[D]-module with left and right lambda-actions of ``over``."""

    def __init__(
        self,
        over: ConformalAlgebra,
        rank: int,
        left: Table,
        right: Table,
        basis_names: Optional[Sequence[str]] = None,
        name: str = "U",
    ):
        if rank < 0:
            raise SpaceMismatchError(f"negative rank {rank}")
        self.over = over
        self.rank = rank
        self.name = name
        self.basis_names = list(basis_names) if basis_names else _default_names("u", rank)
        if len(self.basis_names) != rank:
            raise SpaceMismatchError(f"{len(self.basis_names)} basis names for rank {rank}")
        for (i, a) in left:
            if not (0 <= i < over.rank and 0 <= a < rank):
                raise SpaceMismatchError(f"left action index {(i, a)} out of range")
        for (a, i) in right:
            if not (0 <= i < over.rank and 0 <= a < rank):
                raise SpaceMismatchError(f"right action index {(a, i)} out of range")
        self.left = normalize_table(left, 2, rank)
        self.right = normalize_table(right, 2, rank)
        self.validated = False

    def max_degree(self) -> int:
        return max(table_degree(self.left), table_degree(self.right))

    def act_left(self, p: LambdaExpr, u: LambdaExpr, form: MPoly) -> LambdaExpr:
        if p.space is not self.over or u.space is not self:
            raise SpaceMismatchError(f"left action of {p.space.name} on {u.space.name}")
        return apply_table(self.left, 2, self, [p, u], [form], p.nvars)

    def act_right(self, u: LambdaExpr, p: LambdaExpr, form: MPoly) -> LambdaExpr:
        if p.space is not self.over or u.space is not self:
            raise SpaceMismatchError(f"right action of {p.space.name} on {u.space.name}")
        return apply_table(self.right, 2, self, [u, p], [form], p.nvars)

    def __repr__(self) -> str:
        return f"ConformalBimodule({self.name}, rank={self.rank}, over={self.over.name})"


class SemidirectProduct(ConformalAlgebra):
    """T (+) U with the H-twisted product; T occupies the first block."""

    def __init__(self, base: ConformalAlgebra, module: ConformalBimodule, cocycle: Table, product: Table):
        names = list(base.basis_names) + list(module.basis_names)
        super().__init__(base.rank + module.rank, product, names, name=f"{base.name}x{module.name}")
        self.base = base
        self.module = module
        self.cocycle = cocycle

    @property
    def offset(self) -> int:
        """Index of the first U-block basis vector."""
        return self.base.rank


def lambda_product(T: ConformalAlgebra, a: LambdaExpr, b: LambdaExpr, slot_var: int) -> LambdaExpr:
    """a_lambda b with lambda carried by L{slot_var}."""
    return T.multiply(a, b, slot_form(slot_var, a.nvars))


def left_action(U: ConformalBimodule, p: LambdaExpr, u: LambdaExpr, slot_var: int) -> LambdaExpr:
    return U.act_left(p, u, slot_form(slot_var, p.nvars))


def right_action(U: ConformalBimodule, u: LambdaExpr, p: LambdaExpr, slot_var: int) -> LambdaExpr:
    return U.act_right(u, p, slot_form(slot_var, u.nvars))


def _constant_vector(values: Sequence, nvars: int = 1):
    return tuple(MPoly.const(rat(v) if not isinstance(v, Rat) else v, nvars) for v in values)


def current_algebra(
    constants: Sequence[Sequence[Sequence]],
    basis_names: Optional[Sequence[str]] = None,
    name: str = "T",
) -> ConformalAlgebra:
    """
    Current conformal algebra of a finite-dimensional associative algebra.

    Args:
        constants: c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k (ints, strings
            like ``"1/2"``, Fractions or rationals)
        basis_names: Optional basis labels
        name: Label of the algebra

    Returns:
        The algebra with constant structure constants

    Raises:
        NotAssociativeError: if the input algebra is not associative
    """
    n = len(constants)
    c = [[[rat(v) if not isinstance(v, Rat) else v for v in row] for row in plane] for plane in constants]
    for plane in c:
        if len(plane) != n or any(len(row) != n for row in plane):
            raise SpaceMismatchError("structure constants must form a rank x rank x rank array")

    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    lhs = sum((c[i][j][s] * c[s][k][m] for s in range(n)), rat(0))
                    rhs = sum((c[j][k][s] * c[i][s][m] for s in range(n)), rat(0))
                    if lhs != rhs:
                        raise NotAssociativeError(
                            f"(e{i + 1} e{j + 1}) e{k + 1} != e{i + 1} (e{j + 1} e{k + 1}) at e{m + 1}",
                            witness=(i, j, k),
                        )

    product = {(i, j): _constant_vector(c[i][j]) for i in range(n) for j in range(n)}
    algebra = ConformalAlgebra(n, product, basis_names, name)
    logger.debug("built current algebra %s of rank %d", name, n)
    return algebra


def regular_bimodule(T: ConformalAlgebra, basis_names: Optional[Sequence[str]] = None, name: str = "U") -> ConformalBimodule:
    """T acting on itself; the u-basis mirrors the e-basis."""
    return ConformalBimodule(T, T.rank, dict(T.product), dict(T.product), basis_names, name)


def zero_bimodule(T: ConformalAlgebra, rank: int, name: str = "U") -> ConformalBimodule:
    return ConformalBimodule(T, rank, {}, {}, None, name)


def semidirect_twisted(T: ConformalAlgebra, U: ConformalBimodule, H=None) -> SemidirectProduct:
    """
    (p, u)_L1 (q, v) = (p_L1 q, p_L1 v + u_L1 q + H_L1(p, q)).

    ``H`` is a 2-cochain on (T, U) (anything with a ``table``) or a raw table;
    ``None`` gives the untwisted product.  Associativity is not assumed.
    """
    if U.over is not T:
        raise SpaceMismatchError(f"{U.name} is not a bimodule over {T.name}")
    cocycle: Table = {}
    if H is not None:
        cocycle = getattr(H, "table", H)

    t, u = T.rank, U.rank
    zeros_u = tuple(MPoly.zero(1) for _ in range(u))
    zeros_t = tuple(MPoly.zero(1) for _ in range(t))
    product: Table = {}
    for i in range(t):
        for j in range(t):
            t_part = T.product.get((i, j), zeros_t)
            u_part = cocycle.get((i, j), zeros_u)
            product[(i, j)] = tuple(t_part) + tuple(u_part)
        for b in range(u):
            product[(i, t + b)] = zeros_t + tuple(U.left.get((i, b), zeros_u))
            product[(t + b, i)] = zeros_t + tuple(U.right.get((b, i), zeros_u))
    return SemidirectProduct(T, U, dict(cocycle), product)
