"""
Linear deformations R_t = R + t R1.

Comparing coefficients of t^n in the twisted Rota-Baxter identity for R_t
gives, for every n,

    sum_{i+j=n} R_i(u)_L R_j(v)
        = sum_{i+j=n} R_i(u_L R_j(v) + R_j(u)_L v)
          + sum_{i+j+k=n} R_i H_L(R_j(u), R_k(v))

For a linear series only n = 0..3 are nontrivial; n = 1 says R1 is a
1-cocycle for d_R.
"""

import logging
from typing import List, Optional, Sequence

from conformal import LambdaExpr, ModuleMap, ReportGroup
from conformal.reports import CheckReport
from exactpoly import MPoly
from hochschild import Cochain, CochainError
from linf import d_R
from trb import TRBOperator, require_trb, twisted_delta

logger = logging.getLogger(__name__)

ORDER_ANCHORS = {
    0: "R(u)_L R(v) = R(u_L R(v) + R(u)_L v + H_L(Ru, Rv))",
    1: (
        "R(u)_L R1(v) + R1(u)_L R(v) = R(u_L R1(v) + R1(u)_L v + H_L(R1u, Rv) + H_L(Ru, R1v))"
        " + R1(u_L R(v) + R(u)_L v + H_L(Ru, Rv))"
    ),
    2: "R1(u)_L R1(v) = R1(u_L R1(v) + R1(u)_L v + H_L(R1u, Rv) + H_L(Ru, R1v)) + R H_L(R1u, R1v)",
    3: "R1 H_L(R1u, R1v) = 0",
}
GENERAL_ANCHOR = (
    "sum_{i+j=n} R_i(u)_L R_j(v) = sum_{i+j=n} R_i(u_L R_j v + R_j u_L v)"
    " + sum_{i+j+k=n} R_i H_L(R_j u, R_k v)"
)
COCYCLE_ANCHOR = "d_R(R1) = 0"


def order_identity(
    coefficients: Sequence[Optional[ModuleMap]], H: Cochain, n: int, name: str, anchor: str
) -> CheckReport:
    """Check the coefficient of t^n for R_t = sum t^i coefficients[i] on all U-basis pairs."""
    report = CheckReport(name, anchor)
    ops = [R for R in coefficients if R is not None]
    if not ops:
        return report
    T, U = ops[0].target, ops[0].source
    lam = MPoly.L(1, 1)
    span = range(n + 1)

    def op(i: int) -> Optional[ModuleMap]:
        return coefficients[i] if i < len(coefficients) else None

    us = [LambdaExpr.basis(U, a, 1) for a in range(U.rank)]
    images = {(i, a): op(i).apply(u) for i in span if op(i) is not None for a, u in enumerate(us)}
    for a, u in enumerate(us):
        for b, v in enumerate(us):
            lhs = LambdaExpr.zero(T, 1)
            rhs = LambdaExpr.zero(T, 1)
            for i in span:
                Ri, Rj = op(i), op(n - i)
                if Ri is None or Rj is None:
                    continue
                lhs = lhs + T.multiply(images[(i, a)], images[(n - i, b)], lam)
                inner = U.act_right(u, images[(n - i, b)], lam) + U.act_left(images[(n - i, a)], v, lam)
                rhs = rhs + Ri.apply(inner)
            if not H.is_zero:
                for i in span:
                    for j in range(n - i + 1):
                        k = n - i - j
                        if op(i) is None or op(j) is None or op(k) is None:
                            continue
                        value = H.apply([images[(j, a)], images[(k, b)]], [lam], 1)
                        rhs = rhs + op(i).apply(value)
            report.record(f"t^{n}", (U.basis_names[a], U.basis_names[b]), lhs, rhs)
    return report


def is_one_cocycle(R1: TRBOperator, R: TRBOperator, H: Cochain) -> CheckReport:
    """
    d_R(R1) = 0, cross-checked against the seven-term coboundary.

    Raises:
        NotTRBError: R fails the twisted Rota-Baxter identity
        CochainError: d_R(R1) and -twisted_delta(R1) disagree
    """
    require_trb(R, H)
    g = R1.as_cochain()
    via_brackets = d_R(g, R.as_cochain(), H, check=False)
    direct = twisted_delta(g, R, H, check=False)
    if via_brackets != -direct:
        logger.error("d_R(%s) differs from -twisted_delta(%s)", R1.name, R1.name)
        raise CochainError(f"d_R({R1.name}) and the twisted coboundary disagree")
    report = CheckReport(f"1-cocycle ({R1.name})", COCYCLE_ANCHOR)
    for key in via_brackets.keys():
        report.record_zero("d_R", via_brackets.arg_names(key), via_brackets.entry(key))
    return report


def check_linear_deformation(R: TRBOperator, R1: TRBOperator, H: Cochain) -> ReportGroup:
    """
    The four coefficient identities of R + t R1.

    When R itself passes, the t^1 flag is compared with ``is_one_cocycle``.

    Returns:
        ReportGroup with parts ``t^0`` .. ``t^3``
    """
    group = ReportGroup(f"linear deformation {R.name} + t {R1.name}")
    for n in range(4):
        group.add(order_identity([R, R1], H, n, f"t^{n}", ORDER_ANCHORS[n]))
    if group.parts[0].passed:
        cocycle = is_one_cocycle(R1, R, H)
        if cocycle.passed != group.parts[1].passed:
            logger.error("t^1 identity and d_R(%s) = 0 disagree", R1.name)
            raise CochainError("order-one identity disagrees with the cocycle condition")
    logger.info("linear deformation of %s by %s: %s", R.name, R1.name, [p.passed for p in group.parts])
    return group
