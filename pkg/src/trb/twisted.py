"""
The twisted Hochschild coboundary on cochains g: U^(x m) -> T,

    dg(u_1..u_{m+1}) =
        R(u1)_L1 g(u2..) - R(u1_L1 g(u2..)) - R H_L1(R(u1), g(u2..))
      + sum_j (-1)^j g(.., u_j *_Lj u_{j+1}, ..)
      + (-1)^(m+1) ( g(u1..um)_S R(u_{m+1}) - R(g(u1..um)_S u_{m+1})
                     - R H_S(g(u1..um), R(u_{m+1})) )

with S = L1 + ... + Lm.  This is the Hochschild differential of (U, *) with
values in T through l^R and r^R; for m = 0 the first variable is -D.
"""

import logging

from conformal import LambdaExpr, Table
from exactpoly import MPoly
from hochschild import Cochain
from linf import UCochain

from .checks import star_product
from .induced import require_trb
from .operator import TRBOperator

logger = logging.getLogger(__name__)

TWISTED_ANCHOR = "d_R(g) = (-1)^m dg for the twisted coboundary d"


def twisted_delta(g: UCochain, R: TRBOperator, H: Cochain, check: bool = True) -> UCochain:
    """
    Apply the seven-term twisted coboundary.

    Args:
        g: m-cochain on U with values in T
        R: The operator
        H: Its twisting cocycle
        check: Reject operators that fail the twisted Rota-Baxter identity

    Returns:
        The (m+1)-cochain dg
    """
    if check:
        require_trb(R, H)
    T, U = R.algebra, R.module
    m = g.arity
    nv = m
    L = [None] + [MPoly.L(k, nv) for k in range(1, nv + 1)]
    first = L[1] if m >= 1 else -MPoly.D(nv)
    total = MPoly.sum_L(range(1, nv + 1), nv)
    outer = 1 if (m + 1) % 2 == 0 else -1

    table: Table = {}
    shape = UCochain(U, T, m + 1, {})
    for key in shape.keys():
        us = [LambdaExpr.basis(U, a, nv) for a in key]
        value = LambdaExpr.zero(T, nv)

        tail = g.apply(us[1:], [L[k + 1] for k in range(1, m)], nv)
        if not tail.is_zero:
            R1 = R.apply(us[0])
            value = value + T.multiply(R1, tail, first)
            inner = U.act_right(us[0], tail, first)
            if not H.is_zero:
                inner = inner + H.apply([R1, tail], [first], nv)
            value = value - R.apply(inner)

        for j in range(1, m + 1):
            merged = star_product(R, H, us[j - 1], us[j], L[j])
            if merged.is_zero:
                continue
            args = us[: j - 1] + [merged] + us[j + 1 :]
            slots = []
            for k in range(1, m):
                if k < j:
                    slots.append(L[k])
                elif k == j:
                    slots.append(L[j] + L[j + 1])
                else:
                    slots.append(L[k + 1])
            term = g.apply(args, slots, nv)
            value = value + term if j % 2 == 0 else value - term

        head = g.apply(us[:m], [L[k] for k in range(1, m)], nv)
        if not head.is_zero:
            Rlast = R.apply(us[m])
            term = T.multiply(head, Rlast, total)
            inner = U.act_left(head, us[m], total)
            if not H.is_zero:
                inner = inner + H.apply([head, Rlast], [total], nv)
            term = term - R.apply(inner)
            value = value + term if outer > 0 else value - term

        if not value.is_zero:
            table[key] = value.coeffs
    return UCochain(U, T, m + 1, table, f"d{g.name}")
