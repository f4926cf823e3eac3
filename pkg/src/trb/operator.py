"""
Twisted Rota-Baxter operators as matrices over QQ[D], and the exact matrix
algebra (products, nilpotency, inverses) they need.
"""

import logging
from typing import List, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from conformal import ConformalBimodule, LambdaExpr, ModuleMap
from conformal.errors import SpaceMismatchError
from exactpoly import MPoly, poly_ring
from linf import UCochain

from .errors import NotInvertibleError

logger = logging.getLogger(__name__)


class TRBOperator(ModuleMap):
    """
    C[D]-linear R: U -> T with R(u_a) = sum_i M[i][a](D) e_i.

    Attributes:
        module: The bimodule U
        algebra: The algebra T
        name: Label used in reports
    """

    def __init__(self, U: ConformalBimodule, matrix: Sequence[Sequence[MPoly]], name: str = "R"):
        super().__init__(U, U.over, matrix)
        self.module = U
        self.algebra = U.over
        self.name = name

    @classmethod
    def from_map(cls, phi: ModuleMap, name: str = "R") -> "TRBOperator":
        if not isinstance(phi.source, ConformalBimodule) or phi.target is not phi.source.over:
            raise SpaceMismatchError("an operator runs from a bimodule to the algebra it is over")
        return cls(phi.source, phi.matrix, name)

    @classmethod
    def from_cochain(cls, cochain: UCochain, name: Optional[str] = None) -> "TRBOperator":
        return cls(cochain.module, cochain.to_map().matrix, name or cochain.name)

    @classmethod
    def zero_on(cls, U: ConformalBimodule, name: str = "R") -> "TRBOperator":
        return cls(U, ModuleMap.zero(U, U.over).matrix, name)

    def as_cochain(self) -> UCochain:
        table = {(a,): self.column(a).coeffs for a in range(self.module.rank)}
        return UCochain(self.module, self.algebra, 1, table, self.name)

    def renamed(self, name: str) -> "TRBOperator":
        return TRBOperator(self.module, self.matrix, name)

    def image(self, a: int, nvars: int = 0) -> LambdaExpr:
        """R(u_a)."""
        return self.column(a, nvars)

    def __repr__(self) -> str:
        return f"TRBOperator({self.name}: {self.module.name} -> {self.algebra.name})"


def _domain():
    return poly_ring(0).to_domain()


def to_domain_matrix(phi: ModuleMap) -> DomainMatrix:
    rows = [[entry.element for entry in row] for row in phi.matrix]
    return DomainMatrix(rows, (phi.target.rank, phi.source.rank), _domain())


def from_domain_matrix(M: DomainMatrix, source, target) -> ModuleMap:
    ring_obj = poly_ring(0)
    rows = [[MPoly(0, ring_obj(entry)) for entry in row] for row in M.to_list()]
    return ModuleMap(source, target, rows)


def determinant(phi: ModuleMap) -> MPoly:
    if phi.source.rank != phi.target.rank:
        raise SpaceMismatchError("determinant of a non-square map")
    if phi.source.rank == 0:
        return MPoly.one()
    return MPoly(0, poly_ring(0)(to_domain_matrix(phi).det()))


def is_nilpotent(N: ModuleMap) -> bool:
    if N.source is not N.target:
        raise SpaceMismatchError("nilpotency of a map between different spaces")
    power = N
    for _ in range(N.source.rank):
        if power.is_zero:
            return True
        power = power.compose(N)
    return power.is_zero


def unipotent_inverse(N: ModuleMap) -> ModuleMap:
    """(id + N)^(-1) = sum_k (-N)^k for nilpotent N."""
    if not is_nilpotent(N):
        raise NotInvertibleError("geometric series needs a nilpotent map")
    identity = ModuleMap.identity(N.source)
    total = identity
    power = identity
    for _ in range(N.source.rank):
        power = power.compose(-N)
        if power.is_zero:
            break
        total = total + power
    return total


def inverse(phi: ModuleMap) -> ModuleMap:
    """
    Inverse over QQ[D]; exists iff the determinant is a nonzero constant.

    Raises:
        NotInvertibleError: otherwise, with the determinant in the message
    """
    if phi.source.rank != phi.target.rank:
        raise NotInvertibleError(f"{phi.target.rank} x {phi.source.rank} matrix is not square")
    if phi.source.rank == 0:
        return ModuleMap.zero(phi.target, phi.source)
    adjugate, det = to_domain_matrix(phi).adj_det()
    det_poly = MPoly(0, poly_ring(0)(det))
    if det_poly.is_zero or not det_poly.is_constant:
        logger.info("matrix with determinant %s is not invertible over QQ[D]", det_poly)
        raise NotInvertibleError(f"determinant {det_poly} is not a nonzero constant", str(det_poly))
    factor = 1 / det_poly.constant_value()
    inv = from_domain_matrix(adjugate, phi.target, phi.source)
    return inv.scale(factor)


def one_plus(N: ModuleMap) -> ModuleMap:
    return ModuleMap.identity(N.source) + N


def invert_one_plus(N: ModuleMap) -> ModuleMap:
    """(id + N)^(-1), via the finite geometric series when N is nilpotent."""
    if is_nilpotent(N):
        logger.debug("inverting id + N by the geometric series")
        return unipotent_inverse(N)
    return inverse(one_plus(N))


def matrix_from_rows(rows: List[List], nvars: int = 0) -> List[List[MPoly]]:
    """Accept ints, rationals or MPoly entries."""
    return [[entry if isinstance(entry, MPoly) else MPoly.const(entry, nvars) for entry in row] for row in rows]
