"""Maurer-Cartan residual, the differential d_R and the twisted structure maps."""

import logging

from exactpoly import rat
from hochschild import Cochain, CochainError

from .brackets import UCochain, derived_bracket, ternary_bracket
from .errors import NotTRBError

logger = logging.getLogger(__name__)

MC_ANCHOR = "1/2 [[R,R]] - 1/6 [[R,R,R]] = R(R(u)_L v + u_L R(v) + H_L(Ru,Rv)) - R(u)_L R(v)"
DR_ANCHOR = "d_R(g) = [[R,g]] - 1/2 [[R,R,g]]"


def mc_residual(R: UCochain, H: Cochain) -> UCochain:
    """1/2 [[R, R]] - 1/6 [[R, R, R]]; zero exactly when R is H-twisted Rota-Baxter."""
    if R.arity != 1:
        raise CochainError(f"{R.name} has arity {R.arity}; the Maurer-Cartan equation is for 1-cochains")
    binary = derived_bracket(R, R)
    ternary = ternary_bracket(R, R, R, H)
    return (binary.scale(rat(1, 2)) - ternary.scale(rat(1, 6))).renamed(f"mc({R.name})")


def require_maurer_cartan(R: UCochain, H: Cochain) -> None:
    residual = mc_residual(R, H)
    if not residual.is_zero:
        key = next(iter(sorted(residual.table)))
        witness = residual.arg_names(key)
        logger.warning("%s is not twisted Rota-Baxter, residual at %s", R.name, witness)
        raise NotTRBError(f"{R.name} is not an H-twisted Rota-Baxter operator (witness {witness})", witness)


def d_R(g: UCochain, R: UCochain, H: Cochain, check: bool = True) -> UCochain:
    """
    [[R, g]] - 1/2 [[R, R, g]].

    Args:
        g: m-cochain on U with values in T
        R: The operator as a 1-cochain
        H: The twisting 2-cochain
        check: Reject operators that fail the Maurer-Cartan equation

    Raises:
        NotTRBError: if ``check`` is set and R is not twisted Rota-Baxter
    """
    if check:
        require_maurer_cartan(R, H)
    result = derived_bracket(R, g) - ternary_bracket(R, R, g, H).scale(rat(1, 2))
    return result.renamed(f"d_R({g.name})")


def twisted_l1(A: UCochain, R: UCochain, H: Cochain, check: bool = True) -> UCochain:
    return d_R(A, R, H, check)


def twisted_l2(A: UCochain, B: UCochain, R: UCochain, H: Cochain) -> UCochain:
    """[[A, B]] - [[R, A, B]]."""
    return (derived_bracket(A, B) - ternary_bracket(R, A, B, H)).renamed(f"l2({A.name},{B.name})")


def twisted_l3(A: UCochain, B: UCochain, C: UCochain, H: Cochain) -> UCochain:
    return ternary_bracket(A, B, C, H)


def twisted_mc(Rp: UCochain, R: UCochain, H: Cochain, check: bool = True) -> UCochain:
    """l1(R') + 1/2 l2(R', R') - 1/6 l3(R', R', R'); zero iff R + R' is twisted Rota-Baxter."""
    total = (
        twisted_l1(Rp, R, H, check)
        + twisted_l2(Rp, Rp, R, H).scale(rat(1, 2))
        - twisted_l3(Rp, Rp, Rp, H).scale(rat(1, 6))
    )
    return total.renamed(f"mc_R({Rp.name})")
