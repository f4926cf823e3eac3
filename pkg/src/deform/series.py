"""Deformation series R_t = R_0 + t R_1 + ... and morphism pairs (phi, psi)."""

from dataclasses import dataclass, field
from typing import List, Optional

from conformal import ModuleMap
from conformal.errors import SpaceMismatchError
from trb import TRBOperator


@dataclass
class DeformationSeries:
    """Coefficients R_0..R_N of a formal deformation; R_0 is the base operator."""
    coefficients: List[TRBOperator] = field(default_factory=list)

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a deformation series needs at least the base operator")
        base = self.coefficients[0]
        for R in self.coefficients[1:]:
            if R.source is not base.source or R.target is not base.target:
                raise SpaceMismatchError(f"{R.name} acts between other spaces than {base.name}")

    @classmethod
    def linear(cls, R: TRBOperator, R1: TRBOperator) -> "DeformationSeries":
        return cls([R, R1])

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def base(self) -> TRBOperator:
        return self.coefficients[0]

    def coefficient(self, i: int) -> Optional[TRBOperator]:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return None


@dataclass
class MorphismPair:
    """
    phi: T -> T' and psi: U -> U', both C[D]-linear.

    The order-one maps of an equivalence carry a formal lambda and live in
    ``EquivalencePair`` instead.
    """
    phi: ModuleMap
    psi: ModuleMap

    def __post_init__(self):
        if self.phi.source.rank != self.phi.target.rank:
            raise SpaceMismatchError("phi must be square")
        if self.psi.source.rank != self.psi.target.rank:
            raise SpaceMismatchError("psi must be square")

    @classmethod
    def identity(cls, R: TRBOperator) -> "MorphismPair":
        return cls(ModuleMap.identity(R.algebra), ModuleMap.identity(R.module))

    @classmethod
    def scaled(cls, R: TRBOperator, a, b, T_target=None, U_target=None) -> "MorphismPair":
        """(a id, b id), optionally landing in rescaled copies of T and U."""
        T, U = R.algebra, R.module
        phi = ModuleMap.identity(T).scale(a)
        psi = ModuleMap.identity(U).scale(b)
        if T_target is not None:
            phi = ModuleMap(T, T_target, phi.matrix)
        if U_target is not None:
            psi = ModuleMap(U, U_target, psi.matrix)
        return cls(phi, psi)
