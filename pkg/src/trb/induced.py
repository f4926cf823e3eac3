"""
Structures induced by a twisted Rota-Baxter operator: the associative product
u *_L v on U and the (U, *)-bimodule structure on T given by

    l^R_L(u, p) = R(u)_L p - R(u_L p + H_L(R(u), p))
    r^R_L(p, u) = p_L R(u) - R(p_L u + H_L(p, R(u)))
"""

import logging
from typing import Optional

from conformal import ConformalAlgebra, ConformalBimodule, LambdaExpr
from exactpoly import MPoly
from hochschild import Cochain
from linf import NotTRBError

from .checks import check_trb, star_product
from .operator import TRBOperator

logger = logging.getLogger(__name__)


def require_trb(R: TRBOperator, H: Cochain) -> None:
    report = check_trb(R, H)
    if not report.passed:
        witness = report.first_witness
        raise NotTRBError(f"{R.name} is not twisted Rota-Baxter at {witness.args}: {witness.residual}", witness.args)


def induced_product(R: TRBOperator, H: Cochain, check: bool = True) -> ConformalAlgebra:
    """
    (U, *) with u *_L v = u_L R(v) + R(u)_L v + H_L(R(u), R(v)).

    Raises:
        NotTRBError: if ``check`` is set and R fails the identity
    """
    if check:
        require_trb(R, H)
    U = R.module
    lam = MPoly.L(1, 1)
    us = [LambdaExpr.basis(U, a, 1) for a in range(U.rank)]
    product = {}
    for a, u in enumerate(us):
        for b, v in enumerate(us):
            value = star_product(R, H, u, v, lam)
            if not value.is_zero:
                product[(a, b)] = value.coeffs
    logger.debug("induced product on %s has %d nonzero entries", U.name, len(product))
    return ConformalAlgebra(U.rank, product, U.basis_names, name=f"{U.name}*")


def induced_bimodule(
    R: TRBOperator, H: Cochain, product: Optional[ConformalAlgebra] = None, check: bool = True
) -> ConformalBimodule:
    """
    T as a bimodule over (U, *) through l^R and r^R.

    Args:
        R: The operator
        H: Its twisting cocycle
        product: The induced algebra to act with (built when omitted)
        check: Reject operators that fail the identity

    Returns:
        ConformalBimodule over ``product`` whose underlying module is T
    """
    if product is None:
        product = induced_product(R, H, check)
    elif check:
        require_trb(R, H)
    T, U = R.algebra, R.module
    lam = MPoly.L(1, 1)
    ps = [LambdaExpr.basis(T, i, 1) for i in range(T.rank)]
    left, right = {}, {}
    for a in range(U.rank):
        u = LambdaExpr.basis(U, a, 1)
        for i, p in enumerate(ps):
            value = l_R(R, H, u, p, lam)
            if not value.is_zero:
                left[(a, i)] = value.coeffs
            value = r_R(R, H, p, u, lam)
            if not value.is_zero:
                right[(i, a)] = value.coeffs
    return ConformalBimodule(product, T.rank, left, right, T.basis_names, name=f"{T.name}^{R.name}")


def l_R(R: TRBOperator, H: Cochain, u: LambdaExpr, p: LambdaExpr, form: MPoly) -> LambdaExpr:
    """l^R_form(u, p) on general arguments."""
    T, U = R.algebra, R.module
    Ru = R.apply(u)
    inner = U.act_right(u, p, form)
    if not H.is_zero:
        inner = inner + H.apply([Ru, p], [form], u.nvars)
    return T.multiply(Ru, p, form) - R.apply(inner)


def r_R(R: TRBOperator, H: Cochain, p: LambdaExpr, u: LambdaExpr, form: MPoly) -> LambdaExpr:
    """r^R_form(p, u) on general arguments."""
    T, U = R.algebra, R.module
    Ru = R.apply(u)
    inner = U.act_left(p, u, form)
    if not H.is_zero:
        inner = inner + H.apply([p, Ru], [form], u.nvars)
    return T.multiply(p, Ru, form) - R.apply(inner)
