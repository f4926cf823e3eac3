"""
The twisted Rota-Baxter identity

    R(u)_L R(v) = R(u_L R(v) + R(u)_L v + H_L(R(u), R(v)))

checked directly and through the graph of R inside T (+)_H U.
"""

import logging

from conformal import LambdaExpr, semidirect_twisted
from conformal.reports import CheckReport
from exactpoly import MPoly
from hochschild import Cochain

from .operator import TRBOperator

logger = logging.getLogger(__name__)

TRB_ANCHOR = "R(u)_L R(v) = R(u_L R(v) + R(u)_L v + H_L(R(u), R(v)))"
GRAPH_ANCHOR = "{(R(u), u)} is closed under the H-twisted semidirect product"


def star_product(R: TRBOperator, H: Cochain, x: LambdaExpr, y: LambdaExpr, form: MPoly) -> LambdaExpr:
    """x *_form y = x_form R(y) + R(x)_form y + H_form(R(x), R(y)) in U."""
    U = R.module
    Rx, Ry = R.apply(x), R.apply(y)
    value = U.act_right(x, Ry, form) + U.act_left(Rx, y, form)
    if not H.is_zero:
        value = value + H.apply([Rx, Ry], [form], x.nvars)
    return value


def check_trb(R: TRBOperator, H: Cochain) -> CheckReport:
    """
    Verify the identity on every pair of U-basis vectors.

    Returns:
        CheckReport whose first witness is the first failing pair (in basis
        order) with the residual lhs - rhs
    """
    report = CheckReport(f"twisted Rota-Baxter ({R.name})", TRB_ANCHOR)
    T, U = R.algebra, R.module
    lam = MPoly.L(1, 1)
    us = [LambdaExpr.basis(U, a, 1) for a in range(U.rank)]
    images = [R.apply(u) for u in us]
    for a, u in enumerate(us):
        for b, v in enumerate(us):
            lhs = T.multiply(images[a], images[b], lam)
            rhs = R.apply(star_product(R, H, u, v, lam))
            report.record("trb", (U.basis_names[a], U.basis_names[b]), lhs, rhs)
    logger.info("check_trb(%s): %s after %d pairs", R.name, "pass" if report.passed else "fail", report.checked)
    return report


def graph_check(R: TRBOperator, H: Cochain) -> CheckReport:
    """Closure of the graph {(R(u), u)} under the H-twisted product on generators."""
    report = CheckReport(f"graph subalgebra ({R.name})", GRAPH_ANCHOR)
    T, U = R.algebra, R.module
    S = semidirect_twisted(T, U, H)
    t = S.offset
    lam = MPoly.L(1, 1)

    def graph_vector(a: int) -> LambdaExpr:
        image = R.image(a, 1)
        tail = LambdaExpr.basis(U, a, 1)
        return LambdaExpr(S, 1, image.coeffs + tail.coeffs)

    generators = [graph_vector(a) for a in range(U.rank)]
    for a, x in enumerate(generators):
        for b, y in enumerate(generators):
            product = S.multiply(x, y, lam)
            head = LambdaExpr(T, 1, product.coeffs[:t])
            tail = LambdaExpr(U, 1, product.coeffs[t:])
            report.record("graph", (U.basis_names[a], U.basis_names[b]), head, R.apply(tail))
    return report
