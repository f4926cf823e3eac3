"""Small associative algebras used as carriers of current conformal algebras."""

from typing import List

from .algebra import ConformalAlgebra, current_algebra


def _zeros(n: int) -> List[List[List[int]]]:
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def unit_algebra(name: str = "T") -> ConformalAlgebra:
    """QQ with e.e = e."""
    return current_algebra([[[1]]], ["e"], name)


def dual_numbers(name: str = "T") -> ConformalAlgebra:
    """QQ[x]/(x^2) with e1 = 1, e2 = x."""
    c = _zeros(2)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][0][1] = 1
    return current_algebra(c, ["e1", "e2"], name)


def split_algebra(name: str = "T") -> ConformalAlgebra:
    """QQ x QQ with orthogonal idempotents."""
    c = _zeros(2)
    c[0][0][0] = 1
    c[1][1][1] = 1
    return current_algebra(c, ["e1", "e2"], name)


def zero_algebra(rank: int, name: str = "T") -> ConformalAlgebra:
    return current_algebra(_zeros(rank), None, name)


def matrix_algebra(name: str = "T") -> ConformalAlgebra:
    """2x2 matrices, basis E11, E12, E21, E22 with E_ij E_kl = delta_jk E_il."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    c = _zeros(4)
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                c[a][b][units.index((i, l))] = 1
    return current_algebra(c, ["E11", "E12", "E21", "E22"], name)


def upper_triangular(name: str = "T") -> ConformalAlgebra:
    """Upper-triangular 2x2 matrices, basis E11, E12, E22."""
    units = [(0, 0), (0, 1), (1, 1)]
    c = _zeros(3)
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                c[a][b][units.index((i, l))] = 1
    return current_algebra(c, ["E11", "E12", "E22"], name)
