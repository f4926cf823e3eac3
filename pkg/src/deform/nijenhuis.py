"""
Nijenhuis elements: p in T with

    p_M X - X_{-D-M} p = 0,   X = l^R_L(u, p) - r^R_L(p, u)

for every u, together with the order-one equivalence identities for
R1 = d_R(p) and R1' = 0.
"""

import logging

from conformal import LambdaExpr, ReportGroup
from conformal.reports import CheckReport
from exactpoly import MPoly
from hochschild import Cochain
from linf import UCochain, d_R
from trb import TRBOperator, l_R, r_R, require_trb

from .equivalence import NVARS, equivalence_pair, order_one_equations

logger = logging.getLogger(__name__)

NIJENHUIS_ANCHOR = "p_M (l^R_L(u, p) - r^R_L(p, u)) - (l^R_L(u, p) - r^R_L(p, u))_{-D-M} p = 0"


def is_nijenhuis(p: LambdaExpr, R: TRBOperator, H: Cochain) -> ReportGroup:
    """
    Decide whether p is a Nijenhuis element for R.

    Raises:
        NotTRBError: R fails the twisted Rota-Baxter identity
    """
    require_trb(R, H)
    T, U = R.algebra, R.module
    lam, mu = MPoly.L(1, NVARS), MPoly.L(2, NVARS)
    pn = p.embed(NVARS)

    group = ReportGroup(f"Nijenhuis element {p.to_text()}")
    main = group.add(CheckReport("nijenhuis", NIJENHUIS_ANCHOR))
    for a in range(U.rank):
        u = LambdaExpr.basis(U, a, NVARS)
        X = l_R(R, H, u, pn, lam) - r_R(R, H, pn, u, lam)
        value = T.multiply(pn, X, mu) - T.multiply(X, pn, -MPoly.D(NVARS) - mu)
        main.record_zero("nijenhuis", (U.basis_names[a],), value)

    dp = d_R(UCochain(U, T, 0, {(): p.coeffs}, "p"), R.as_cochain(), H, check=False)
    R1 = TRBOperator.from_cochain(dp, name="d_R(p)")
    zero = TRBOperator.zero_on(U, name="0")
    for report in order_one_equations(equivalence_pair(p, R, H), R1, zero):
        group.add(report)

    logger.info("%s: %s", group.name, "Nijenhuis" if group.passed else "not Nijenhuis")
    return group
