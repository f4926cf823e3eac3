"""
Brackets on the graded space of cochains U^(x a) -> T.

The binary bracket is derived from the untwisted semidirect product T (+) U:

    [[A, B]] = (-1)^a  restrict( [[mu, lift A]_G, lift B]_G )

and the ternary bracket inserts H(B, C)-type composites into the third
argument with the six signed sums of the twisted construction.  With these
signs

    [[R, R]](u, v) = 2 (R(R(u)_L v + u_L R(v)) - R(u)_L R(v))
    [[R, R, R]](u, v) = -6 R(H_L(R(u), R(v))).
"""

import itertools
import logging
from typing import Iterable, List, Optional, Tuple

from conformal import ConformalAlgebra, ConformalBimodule, SemidirectProduct, Table, semidirect_twisted
from conformal.errors import SpaceMismatchError
from exactpoly import MPoly
from hochschild import Cochain, compose_at, gerstenhaber, product_cochain

logger = logging.getLogger(__name__)

BINARY_ANCHOR = "[[R,R]](u,v) = 2(R(R(u)_L v + u_L R(v)) - R(u)_L R(v))"
TERNARY_ANCHOR = "[[R,R,R]](u,v) = -6 R(H_L(R(u), R(v)))"


class UCochain(Cochain):
    """An a-cochain on the bimodule U with values in the algebra T."""

    def __init__(self, U: ConformalBimodule, T: ConformalAlgebra, arity: int, table: Table, name: str = "A"):
        if U.over is not T:
            raise SpaceMismatchError(f"{U.name} is not a bimodule over {T.name}")
        self.module = U
        self.algebra = T
        super().__init__((U,) * arity, T, table, name)

    @classmethod
    def zero_on(cls, U: ConformalBimodule, arity: int, name: str = "0") -> "UCochain":
        return cls(U, U.over, arity, {}, name)

    @classmethod
    def of(cls, cochain: Cochain, U: Optional[ConformalBimodule] = None) -> "UCochain":
        """View a plain cochain U^a -> T as a UCochain (U is needed for arity 0)."""
        if isinstance(cochain, UCochain):
            return cochain
        module = cochain.arg_spaces[0] if cochain.arity else U
        if module is None:
            raise SpaceMismatchError("a 0-cochain does not determine its bimodule")
        if any(space is not module for space in cochain.arg_spaces):
            raise SpaceMismatchError(f"{cochain.name} does not take all arguments in {module.name}")
        return cls(module, cochain.target, cochain.arity, cochain.table, cochain.name)

    def _rebuild(self, table: Table, name: str) -> "UCochain":
        return UCochain(self.module, self.algebra, self.arity, table, name)


def _check_pair(A: UCochain, B: UCochain) -> None:
    if A.module is not B.module or A.algebra is not B.algebra:
        raise SpaceMismatchError(f"{A.name} and {B.name} live on different (T, U)")


def untwisted(U: ConformalBimodule) -> SemidirectProduct:
    """T (+) U with H = 0."""
    return semidirect_twisted(U.over, U, None)


def lift(A: UCochain, S: SemidirectProduct) -> Cochain:
    """
    The cochain (p_i, u_i) -> (A(u_1, ..., u_a), 0) on T (+) U.

    Entries with a T-block argument vanish; values sit in the T-block.
    """
    t = S.offset
    padding = tuple(MPoly.zero(A.nvars) for _ in range(S.rank - t))
    table = {tuple(t + k for k in key): tuple(vector) + padding for key, vector in A.table.items()}
    return Cochain((S,) * A.arity, S, table, A.name)


def restrict(C: Cochain, S: SemidirectProduct, name: str = "A") -> UCochain:
    """Arguments in the U-block, values projected to the T-block."""
    t = S.offset
    table: Table = {}
    for key, vector in C.table.items():
        if all(k >= t for k in key):
            head = vector[:t]
            if any(not c.is_zero for c in head):
                table[tuple(k - t for k in key)] = head
    return UCochain(S.module, S.base, C.arity, table, name)


def _mixed_keys(S: SemidirectProduct, arity: int, base_slots: int) -> List[Tuple[int, ...]]:
    """Tuples with at most ``base_slots`` entries in the T-block, the rest in U."""
    t = S.offset
    keys = []
    for key in itertools.product(range(S.rank), repeat=arity):
        if sum(1 for k in key if k < t) <= base_slots:
            keys.append(key)
    return keys


def _module_keys(S: SemidirectProduct, arity: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(S.offset, S.rank), repeat=arity))


def derived_bracket(A: UCochain, B: UCochain) -> UCochain:
    """
    Binary bracket of degree 0 built from the semidirect multiplication.

    Args:
        A: a-cochain on U with values in T
        B: b-cochain on the same (T, U)

    Returns:
        The (a + b)-cochain [[A, B]]
    """
    _check_pair(A, B)
    S = untwisted(A.module)
    mu = product_cochain(S)
    inner = gerstenhaber(mu, lift(A, S), _mixed_keys(S, A.arity + 1, 1))
    outer = gerstenhaber(inner, lift(B, S), _module_keys(S, A.arity + B.arity))
    result = restrict(outer, S, f"[[{A.name},{B.name}]]")
    return result.scale(-1) if A.arity % 2 else result


def _h_composite(H: Cochain, Y: UCochain, Z: UCochain) -> Cochain:
    """(u..., v...) -> H_{sum of Y's variables}(Y(u...), Z(v...))."""
    return compose_at(compose_at(H, Z, 2), Y, 1)


def _insert_sum(X: UCochain, inner: Cochain, exponent: int) -> UCochain:
    """sum_j (-1)^((j-1) * exponent) X(.., inner(..), ..) over the slots of X."""
    arity = X.arity + inner.arity - 1
    total = UCochain.zero_on(X.module, arity)
    for j in range(1, X.arity + 1):
        term = UCochain.of(compose_at(X, inner, j), X.module)
        total = total - term if ((j - 1) * exponent) % 2 else total + term
    return total


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def ternary_bracket(A: UCochain, B: UCochain, C: UCochain, H: Cochain) -> UCochain:
    """
    Ternary bracket of degree -1 twisted by the 2-cochain H: T x T -> U.

    Every summand inserts H applied to two of the arguments into the third;
    with H = 0 the bracket vanishes.
    """
    _check_pair(A, B)
    _check_pair(B, C)
    U, T = A.module, A.algebra
    if H.arity != 2 or H.target is not U or any(s is not T for s in H.arg_spaces):
        raise SpaceMismatchError(f"{H.name} is not a 2-cochain on {T.name} with values in {U.name}")
    a, b, c = A.arity, B.arity, C.arity
    arity = a + b + c - 1
    total = UCochain.zero_on(U, arity, f"[[{A.name},{B.name},{C.name}]]")
    if arity < 0 or H.is_zero:
        return total

    terms = [
        (1, A, B, C, b),
        (-_sign(b * c), A, C, B, c),
        (-_sign(a * b), B, A, C, a),
        (_sign(a * (b + c)), B, C, A, c),
        (-_sign(a * b + b * c + c * a), C, B, A, b),
        (_sign(c * (a + b)), C, A, B, a),
    ]
    for sign, X, Y, Z, exponent in terms:
        if X.arity == 0 or X.is_zero or Y.is_zero or Z.is_zero:
            continue
        summand = _insert_sum(X, _h_composite(H, Y, Z), exponent)
        total = total + summand if sign > 0 else total - summand
    return total.scale(-1) if (a * b * c) % 2 else total
