"""
Symbolic axiom checks for conformal algebras, bimodules and algebra maps.

All identities are compared as MPoly tables in D, L1 (= lambda) and
L2 (= mu) over every basis tuple.
"""

import logging
from typing import Optional

from exactpoly import MPoly

from .algebra import ConformalAlgebra, ConformalBimodule
from .lambda_calculus import LambdaExpr
from .linear_map import ModuleMap
from .reports import CheckReport

logger = logging.getLogger(__name__)

ASSOCIATIVITY = "(a_L b)_{L+M} c = a_L (b_M c)"
BIMODULE_LEFT_RIGHT = "(p_L u)_{L+M} q = p_L (u_M q)"
BIMODULE_RIGHT = "(u_L p)_{L+M} q = u_L (p_M q)"
BIMODULE_LEFT = "(p_L q)_{L+M} u = p_L (q_M u)"
ALGEBRA_MORPHISM = "phi(a_L b) = phi(a)_L phi(b)"


def check_associativity(T: ConformalAlgebra) -> CheckReport:
    """
    Verify (e_i L1 e_j)_{L1+L2} e_k = e_i L1 (e_j L2 e_k) on all basis triples.

    Returns:
        CheckReport listing every violating triple
    """
    report = CheckReport("associativity", ASSOCIATIVITY)
    lam, mu = MPoly.L(1, 2), MPoly.L(2, 2)
    basis = [LambdaExpr.basis(T, i, 2) for i in range(T.rank)]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            ab = T.multiply(a, b, lam)
            for k, c in enumerate(basis):
                lhs = T.multiply(ab, c, lam + mu)
                rhs = T.multiply(a, T.multiply(b, c, mu), lam)
                names = (T.basis_names[i], T.basis_names[j], T.basis_names[k])
                report.record("associativity", names, lhs, rhs)
    if report.passed:
        T.validated = True
    else:
        logger.warning("associativity fails for %s at %s", T.name, report.first_witness.args)
    return report


def check_bimodule(T: ConformalAlgebra, U: ConformalBimodule) -> CheckReport:
    """The three mixed associativity identities on all basis triples."""
    report = CheckReport("bimodule", "; ".join([BIMODULE_LEFT_RIGHT, BIMODULE_RIGHT, BIMODULE_LEFT]))
    if U.over is not T:
        report.fail("bimodule", (U.name, T.name), "module is defined over another algebra")
        return report

    lam, mu = MPoly.L(1, 2), MPoly.L(2, 2)
    ps = [LambdaExpr.basis(T, i, 2) for i in range(T.rank)]
    us = [LambdaExpr.basis(U, a, 2) for a in range(U.rank)]
    tn, un = T.basis_names, U.basis_names

    for i, p in enumerate(ps):
        for a, u in enumerate(us):
            for j, q in enumerate(ps):
                lhs = U.act_right(U.act_left(p, u, lam), q, lam + mu)
                rhs = U.act_left(p, U.act_right(u, q, mu), lam)
                report.record("left-right", (tn[i], un[a], tn[j]), lhs, rhs)

    for a, u in enumerate(us):
        for i, p in enumerate(ps):
            for j, q in enumerate(ps):
                lhs = U.act_right(U.act_right(u, p, lam), q, lam + mu)
                rhs = U.act_right(u, T.multiply(p, q, mu), lam)
                report.record("right", (un[a], tn[i], tn[j]), lhs, rhs)

    for i, p in enumerate(ps):
        for j, q in enumerate(ps):
            pq = T.multiply(p, q, lam)
            for a, u in enumerate(us):
                lhs = U.act_left(pq, u, lam + mu)
                rhs = U.act_left(p, U.act_left(q, u, mu), lam)
                report.record("left", (tn[i], tn[j], un[a]), lhs, rhs)

    if report.passed:
        U.validated = True
    else:
        logger.warning("bimodule axioms fail for %s at %s", U.name, report.first_witness)
    return report


def check_algebra_morphism(
    A: ConformalAlgebra,
    B: ConformalAlgebra,
    phi: ModuleMap,
    name: Optional[str] = None,
) -> CheckReport:
    """Verify phi(e_i L1 e_j) = phi(e_i) L1 phi(e_j) for a C[D]-linear phi: A -> B."""
    report = CheckReport(name or "algebra morphism", ALGEBRA_MORPHISM)
    lam = MPoly.L(1, 1)
    basis = [LambdaExpr.basis(A, i, 1) for i in range(A.rank)]
    images = [phi.apply(x) for x in basis]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            lhs = phi.apply(A.multiply(x, y, lam))
            rhs = B.multiply(images[i], images[j], lam)
            report.record("morphism", (A.basis_names[i], A.basis_names[j]), lhs, rhs)
    return report
