"""
Morphisms of twisted Rota-Baxter operators and order-one equivalences.

An equivalence of R + t R1 and R + t R1' generated by p in T is

    phi_t = id + t phi1,   phi1(q) = p_L q - q_{-D-L} p
    psi_t = id + t psi1,   psi1(u) = p_L u - u_{-D-L} p + H_L(p, R u) - H_{-D-L}(R u, p)

All identities below are compared as polynomials in the formal variables
L = L1 and M = L2.
"""

import logging
from dataclasses import dataclass
from typing import List

from conformal import LambdaExpr, ReportGroup, check_algebra_morphism
from conformal.errors import SpaceMismatchError
from conformal.reports import CheckReport
from exactpoly import MPoly
from hochschild import Cochain, CochainError
from linf import UCochain, d_R
from trb import TRBOperator

from .series import MorphismPair

logger = logging.getLogger(__name__)

LEFT_ACTION_ANCHOR = "psi(p_L u) = phi(p)_L psi(u)"
RIGHT_ACTION_ANCHOR = "psi(u_L p) = psi(u)_L phi(p)"
COCYCLE_MAP_ANCHOR = "psi(H_L(p, q)) = H'_L(phi(p), phi(q))"
OPERATOR_MAP_ANCHOR = "phi(R(u)) = R'(psi(u))"

COMMUTATOR_ANCHOR = "(p_L q - q_{-D-L} p)_M (p_L r - r_{-D-L} p) = 0"
LEFT_DERIVATION_ANCHOR = "psi1(q_M u) = phi1(q)_{L+M} u + q_M psi1(u)"
LEFT_SQUARE_ANCHOR = "phi1(q)_M psi1(u) = 0"
COCYCLE_DERIVATION_ANCHOR = "psi1(H_M(q, r)) = H_{L+M}(phi1(q), r) + H_M(q, phi1(r))"
COCYCLE_SQUARE_ANCHOR = "H_{L+M}(phi1(q), phi1(r)) = 0"
OPERATOR_ORDER_ONE_ANCHOR = "R1(u) + phi1(R(u)) = R(psi1(u)) + R1'(u)"
OPERATOR_ORDER_TWO_ANCHOR = "phi1(R1(u)) = R1'(psi1(u))"
DIFFERENCE_ANCHOR = "R1 - R1' = d_R(p)"

NVARS = 2


def _lam(nvars: int = NVARS) -> MPoly:
    return MPoly.L(1, nvars)


def _mu(nvars: int = NVARS) -> MPoly:
    return MPoly.L(2, nvars)


@dataclass
class EquivalencePair:
    """The order-one maps phi1, psi1 generated by p in T."""
    p: LambdaExpr
    R: TRBOperator
    H: Cochain

    def __post_init__(self):
        if self.p.space is not self.R.algebra:
            raise SpaceMismatchError(f"{self.p.space.name} is not the algebra of {self.R.name}")
        if self.p.nvars != 0:
            raise SpaceMismatchError("the generating element carries no lambda variables")

    def _p(self, nvars: int) -> LambdaExpr:
        return self.p.embed(nvars)

    def phi1(self, x: LambdaExpr, lam: MPoly) -> LambdaExpr:
        """p_lam x - x_{-D-lam} p."""
        T = self.R.algebra
        p = self._p(x.nvars)
        return T.multiply(p, x, lam) - T.multiply(x, p, -MPoly.D(x.nvars) - lam)

    def psi1(self, u: LambdaExpr, lam: MPoly) -> LambdaExpr:
        """p_lam u - u_{-D-lam} p + H_lam(p, R u) - H_{-D-lam}(R u, p)."""
        U = self.R.module
        n = u.nvars
        p = self._p(n)
        opposite = -MPoly.D(n) - lam
        value = U.act_left(p, u, lam) - U.act_right(u, p, opposite)
        if not self.H.is_zero:
            Ru = self.R.apply(u)
            value = value + self.H.apply([p, Ru], [lam], n) - self.H.apply([Ru, p], [opposite], n)
        return value

    @property
    def phi_columns(self) -> List[LambdaExpr]:
        T = self.R.algebra
        return [self.phi1(LambdaExpr.basis(T, i, 1), _lam(1)) for i in range(T.rank)]

    @property
    def psi_columns(self) -> List[LambdaExpr]:
        U = self.R.module
        return [self.psi1(LambdaExpr.basis(U, a, 1), _lam(1)) for a in range(U.rank)]

    @property
    def is_identity(self) -> bool:
        """phi_t = id and psi_t = id to first order."""
        return all(c.is_zero for c in self.phi_columns) and all(c.is_zero for c in self.psi_columns)

    def zeroth_order(self) -> MorphismPair:
        return MorphismPair.identity(self.R)


def equivalence_pair(p: LambdaExpr, R: TRBOperator, H: Cochain) -> EquivalencePair:
    pair = EquivalencePair(p, R, H)
    logger.debug("equivalence pair generated by %s", p.to_text())
    return pair


def check_morphism(
    pair: MorphismPair,
    R: TRBOperator,
    H: Cochain,
    R_target: TRBOperator,
    H_target: Cochain,
) -> ReportGroup:
    """
    Verify that (phi, psi) is a morphism from R to R_target.

    The target structures are the codomains of ``pair``; pass rescaled
    copies of T and U there to compare against rescaled operators.

    Returns:
        ReportGroup with the algebra-morphism check on phi followed by the
        action, cocycle and operator compatibilities
    """
    phi, psi = pair.phi, pair.psi
    T, U = R.algebra, R.module
    T2, U2 = phi.target, psi.target
    if phi.source is not T or psi.source is not U:
        raise SpaceMismatchError("the pair does not start at the spaces of R")
    if R_target.algebra is not T2 or R_target.module is not U2:
        raise SpaceMismatchError(f"{R_target.name} does not act between the codomains of the pair")

    group = ReportGroup(f"morphism {R.name} -> {R_target.name}")
    group.add(check_algebra_morphism(T, T2, phi, name="phi algebra morphism"))

    lam = _lam(1)
    ps = [LambdaExpr.basis(T, i, 1) for i in range(T.rank)]
    us = [LambdaExpr.basis(U, a, 1) for a in range(U.rank)]
    phi_ps = [phi.apply(p) for p in ps]
    psi_us = [psi.apply(u) for u in us]
    tn, un = T.basis_names, U.basis_names

    left = group.add(CheckReport("left action", LEFT_ACTION_ANCHOR))
    right = group.add(CheckReport("right action", RIGHT_ACTION_ANCHOR))
    for i, p in enumerate(ps):
        for a, u in enumerate(us):
            left.record("left", (tn[i], un[a]), psi.apply(U.act_left(p, u, lam)), U2.act_left(phi_ps[i], psi_us[a], lam))
            right.record("right", (un[a], tn[i]), psi.apply(U.act_right(u, p, lam)), U2.act_right(psi_us[a], phi_ps[i], lam))

    cocycle = group.add(CheckReport("twisting cocycle", COCYCLE_MAP_ANCHOR))
    for i, p in enumerate(ps):
        for j, q in enumerate(ps):
            lhs = psi.apply(H.apply([p, q], [lam], 1))
            rhs = H_target.apply([phi_ps[i], phi_ps[j]], [lam], 1)
            cocycle.record("H", (tn[i], tn[j]), lhs, rhs)

    operator = group.add(CheckReport("operator", OPERATOR_MAP_ANCHOR))
    for a in range(U.rank):
        u = LambdaExpr.basis(U, a)
        operator.record("R", (un[a],), phi.apply(R.apply(u)), R_target.apply(psi.apply(u)))

    if not group.passed:
        logger.warning("(phi, psi) is not a morphism: first failure %s", group.first_witness)
    return group


def order_one_equations(
    pair: EquivalencePair, R1: TRBOperator, R1_prime: TRBOperator
) -> List[CheckReport]:
    """The compatibility identities an order-one equivalence has to satisfy."""
    R, H = pair.R, pair.H
    T, U = R.algebra, R.module
    lam, mu = _lam(), _mu()
    ps = [LambdaExpr.basis(T, i, NVARS) for i in range(T.rank)]
    us = [LambdaExpr.basis(U, a, NVARS) for a in range(U.rank)]
    phis = [pair.phi1(q, lam) for q in ps]
    psis = [pair.psi1(u, lam) for u in us]
    tn, un = T.basis_names, U.basis_names

    commutator = CheckReport("commutators", COMMUTATOR_ANCHOR)
    cocycle_derivation = CheckReport("cocycle derivation", COCYCLE_DERIVATION_ANCHOR)
    cocycle_square = CheckReport("cocycle square", COCYCLE_SQUARE_ANCHOR)
    for j, q in enumerate(ps):
        for k, r in enumerate(ps):
            names = (tn[j], tn[k])
            commutator.record_zero("commutator", names, T.multiply(phis[j], phis[k], mu))
            lhs = pair.psi1(H.apply([q, r], [mu], NVARS), lam)
            rhs = H.apply([phis[j], r], [lam + mu], NVARS) + H.apply([q, phis[k]], [mu], NVARS)
            cocycle_derivation.record("derivation", names, lhs, rhs)
            cocycle_square.record_zero("square", names, H.apply([phis[j], phis[k]], [lam + mu], NVARS))

    derivation = CheckReport("left derivation", LEFT_DERIVATION_ANCHOR)
    square = CheckReport("left square", LEFT_SQUARE_ANCHOR)
    for j, q in enumerate(ps):
        for a, u in enumerate(us):
            names = (tn[j], un[a])
            lhs = pair.psi1(U.act_left(q, u, mu), lam)
            rhs = U.act_left(phis[j], u, lam + mu) + U.act_left(q, psis[a], mu)
            derivation.record("derivation", names, lhs, rhs)
            square.record_zero("square", names, U.act_left(phis[j], psis[a], mu))

    first = CheckReport("operator order one", OPERATOR_ORDER_ONE_ANCHOR)
    second = CheckReport("operator order two", OPERATOR_ORDER_TWO_ANCHOR)
    for a, u in enumerate(us):
        lhs = R1.apply(u) + pair.phi1(R.apply(u), lam)
        rhs = R.apply(psis[a]) + R1_prime.apply(u)
        first.record("R1", (un[a],), lhs, rhs)
        second.record("R1'", (un[a],), pair.phi1(R1.apply(u), lam), R1_prime.apply(psis[a]))

    return [commutator, derivation, square, cocycle_derivation, cocycle_square, first, second]


def _as_u_cochain(p: LambdaExpr, R: TRBOperator, name: str = "p") -> UCochain:
    return UCochain(R.module, R.algebra, 0, {(): p.coeffs}, name)


def check_linear_equivalence(
    R: TRBOperator, R1: TRBOperator, R1_prime: TRBOperator, H: Cochain, p: LambdaExpr
) -> ReportGroup:
    """
    Check that p generates an order-one equivalence between R + t R1 and R + t R1'.

    When every identity holds, R1 - R1' = d_R(p) follows; it is verified as
    a final part of the report.

    Raises:
        CochainError: the identities hold but R1 - R1' != d_R(p)
    """
    pair = equivalence_pair(p, R, H)
    group = ReportGroup(f"linear equivalence {R1.name} ~ {R1_prime.name}")
    for report in order_one_equations(pair, R1, R1_prime):
        group.add(report)

    difference = CheckReport("coboundary", DIFFERENCE_ANCHOR)
    dp = d_R(_as_u_cochain(p, R), R.as_cochain(), H, check=False)
    delta = R1.as_cochain() - R1_prime.as_cochain()
    residual = delta - dp
    for key in residual.keys():
        difference.record_zero("difference", residual.arg_names(key), residual.entry(key))
    if group.passed and not difference.passed:
        logger.error("order-one equations hold but R1 - R1' != d_R(p): %s", difference.first_witness)
        raise CochainError("order-one equivalence does not produce R1 - R1' = d_R(p)")
    group.add(difference)
    return group


def gauge_first_order(R: TRBOperator, R1: TRBOperator, p: LambdaExpr, H: Cochain) -> List[LambdaExpr]:
    """
    Coefficient of t in phi_t o (R + t R1) o psi_t^(-1), one value per U-basis vector:

        R1(u) - R(psi1(u)) + phi1(R(u))
    """
    pair = equivalence_pair(p, R, H)
    U = R.module
    lam = _lam(1)
    values = []
    for a in range(U.rank):
        u = LambdaExpr.basis(U, a, 1)
        values.append(R1.apply(u) - R.apply(pair.psi1(u, lam)) + pair.phi1(R.apply(u), lam))
    return values
