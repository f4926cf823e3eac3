"""
The conformal Hochschild differential on C^n(T, U) and the 2-cocycle check.

For an n-cochain f the (n+1)-cochain df is

    p1_L1 f_{L2..Ln}(p2, ..., p_{n+1})
    + sum_j (-1)^j f_{L1, .., Lj + L(j+1), .., Ln}(p1, .., pj_Lj p(j+1), .., p_{n+1})
    + (-1)^(n+1) f_{L1..L(n-1)}(p1, ..., pn)_{L1+...+Ln} p_{n+1}

evaluated on basis tuples.  For n = 0 the first lambda is -D and the last
sum is empty, so (dp)(q) = q_{-D} p - p_0 q.
"""

import logging
from typing import List

from conformal import ConformalAlgebra, LambdaExpr, Table
from conformal.errors import SpaceMismatchError
from conformal.reports import CheckReport
from exactpoly import MPoly

from .cochain import Cochain
from .errors import CochainError

logger = logging.getLogger(__name__)

COCYCLE_ANCHOR = (
    "p1_L1 H_L2(p2, p3) - H_{L1+L2}(p1_L1 p2, p3) + H_L1(p1, p2_L2 p3) "
    "- H_L1(p1, p2)_{L1+L2} p3 = 0"
)


def _act_left(target, algebra: ConformalAlgebra, p: LambdaExpr, x: LambdaExpr, form: MPoly) -> LambdaExpr:
    if target is algebra:
        return algebra.multiply(p, x, form)
    return target.act_left(p, x, form)


def _act_right(target, algebra: ConformalAlgebra, x: LambdaExpr, p: LambdaExpr, form: MPoly) -> LambdaExpr:
    if target is algebra:
        return algebra.multiply(x, p, form)
    return target.act_right(x, p, form)


def source_algebra(f: Cochain) -> ConformalAlgebra:
    """The algebra T of a cochain in C^n(T, U); U may be T itself."""
    target = f.target
    algebra = target if isinstance(target, ConformalAlgebra) else getattr(target, "over", None)
    if algebra is None:
        raise CochainError(f"{target.name} is neither an algebra nor a bimodule")
    if any(space is not algebra for space in f.arg_spaces):
        raise SpaceMismatchError(f"{f.name} does not take arguments in {algebra.name}")
    return algebra


def hochschild_delta(f: Cochain) -> Cochain:
    """
    Conformal Hochschild coboundary of f in C^n(T, U).

    Args:
        f: Cochain whose arguments lie in T and whose values lie in a
            T-bimodule (or in T, acting on itself)

    Returns:
        The (n+1)-cochain df
    """
    T = source_algebra(f)
    U = f.target
    n = f.arity
    nv = n  # variables of the result
    D = MPoly.D(nv)
    L = [None] + [MPoly.L(k, nv) for k in range(1, nv + 1)]
    first = L[1] if n >= 1 else -D
    total = MPoly.sum_L(range(1, nv + 1), nv)

    table: Table = {}
    spaces = (T,) * (n + 1)
    shape = Cochain(spaces, U, {})
    for key in shape.keys():
        ps = [LambdaExpr.basis(T, k, nv) for k in key]
        value = LambdaExpr.zero(U, nv)

        tail = f.apply(ps[1:], [L[k + 1] for k in range(1, n)], nv)
        if not tail.is_zero:
            value = value + _act_left(U, T, ps[0], tail, first)

        for j in range(1, n + 1):
            merged = T.multiply(ps[j - 1], ps[j], L[j])
            if merged.is_zero:
                continue
            args: List[LambdaExpr] = ps[: j - 1] + [merged] + ps[j + 1 :]
            slots = []
            for k in range(1, n):
                if k < j:
                    slots.append(L[k])
                elif k == j:
                    slots.append(L[j] + L[j + 1])
                else:
                    slots.append(L[k + 1])
            term = f.apply(args, slots, nv)
            value = value + term if j % 2 == 0 else value - term

        head = f.apply(ps[:n], [L[k] for k in range(1, n)], nv)
        if not head.is_zero:
            term = _act_right(U, T, head, ps[n], total)
            value = value + term if (n + 1) % 2 == 0 else value - term

        if not value.is_zero:
            table[key] = value.coeffs
    return Cochain(spaces, U, table, f"d{f.name}")


def is_two_cocycle(H: Cochain) -> CheckReport:
    """
    Check dH = 0 for a 2-cochain.

    Returns:
        CheckReport, truthy iff H is a cocycle; failures list the basis triple
        and the nonzero value of dH there
    """
    if H.arity != 2:
        raise CochainError(f"{H.name} has arity {H.arity}, expected 2")
    report = CheckReport("2-cocycle", COCYCLE_ANCHOR)
    dH = hochschild_delta(H)
    for key in dH.keys():
        report.record_zero("dH", dH.arg_names(key), dH.entry(key))
    if not report.passed:
        logger.info("%s is not a 2-cocycle: first witness %s", H.name, report.first_witness.args)
    return report
