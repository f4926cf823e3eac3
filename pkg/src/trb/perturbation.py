"""
Changing H by a coboundary and moving the graph of R.

- twist_by_coboundary: H' = H + dh, with (p, u) -> (p, u + h(p)) an
  isomorphism T (+)_{H+dh} U -> T (+)_H U.
- perturb_graph: the images of Gr(R) under (p, u) -> (p, u + h'(p)) for a
  1-cocycle h' (mode "xi") or under (p, u) -> (p, u - h(p)) for any h
  (mode "phi"), read back as graphs of new operators.
- from_invertible_onecochain: R = h^(-1) is a (-dh)-twisted operator.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from conformal import ModuleMap, check_algebra_morphism, semidirect_twisted
from conformal.reports import CheckReport
from exactpoly import MPoly
from hochschild import Cochain, hochschild_delta

from .checks import check_trb
from .errors import NotCocycleError, NotInvertibleError
from .induced import induced_product
from .operator import TRBOperator, inverse, invert_one_plus

logger = logging.getLogger(__name__)

MODES = ("xi", "phi")


def _block_map(source, target, h: Optional[ModuleMap], sign: int = 1) -> ModuleMap:
    """(p, u) -> (p, u + sign * h(p)) between semidirect products."""
    t = source.offset
    rank = source.rank
    rows: List[List[MPoly]] = [[MPoly.one() if i == j else MPoly.zero() for j in range(rank)] for i in range(rank)]
    if h is not None:
        for b in range(rank - t):
            for i in range(t):
                rows[t + b][i] = h.entry(b, i) * sign
    return ModuleMap(source, target, rows)


def twist_by_coboundary(H: Cochain, h: Cochain) -> Tuple[Cochain, CheckReport]:
    """
    H' = H + dh and the check that (p, u) -> (p, u + h(p)) is an isomorphism
    from the H'-twisted to the H-twisted semidirect product.
    """
    U = H.target
    T = U.over
    dh = hochschild_delta(h)
    twisted = (H + dh).renamed(f"{H.name}+d{h.name}")
    source = semidirect_twisted(T, U, twisted)
    target = semidirect_twisted(T, U, H)
    phi = _block_map(source, target, h.to_map())
    report = check_algebra_morphism(source, target, phi, name="coboundary twist isomorphism")
    return twisted, report


@dataclass
class Perturbation:
    """Result of moving the graph of R."""
    operator: TRBOperator
    cocycle: Cochain
    mode: str
    report: CheckReport


def perturb_graph(R: TRBOperator, H: Cochain, h: Cochain, mode: str = "xi") -> Perturbation:
    """
    New operator whose graph is the image of Gr(R).

    Args:
        R: The operator
        H: Its twisting cocycle
        h: A 1-cochain T -> U (a 1-cocycle in mode ``"xi"``)
        mode: ``"xi"`` gives R (id + hR)^(-1) against H, ``"phi"`` gives
            R (id - hR)^(-1) against H + dh

    Raises:
        NotCocycleError: ``"xi"`` with dh != 0
        NotInvertibleError: id +- hR is not invertible over QQ[D]
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    hmap = h.to_map()
    N = hmap.compose(R)
    if mode == "xi":
        dh = hochschild_delta(h)
        if not dh.is_zero:
            key = sorted(dh.table)[0]
            raise NotCocycleError(f"{h.name} is not a 1-cocycle: d{h.name} != 0 at {dh.arg_names(key)}", dh.arg_names(key))
        correction = invert_one_plus(N)
        cocycle = H
    else:
        correction = invert_one_plus(-N)
        cocycle = (H + hochschild_delta(h)).renamed(f"{H.name}+d{h.name}")
    operator = TRBOperator.from_map(R.compose(correction), name=f"{R.name}_{h.name}")
    report = check_trb(operator, cocycle)
    logger.info("perturbed %s in mode %s: %s", R.name, mode, "TRB" if report.passed else "not TRB")
    return Perturbation(operator, cocycle, mode, report)


def check_induced_iso(R: TRBOperator, R_h: TRBOperator, h: Cochain, H: Cochain) -> CheckReport:
    """id + h o R is an algebra map (U, *_R) -> (U, *_{R_h})."""
    source = induced_product(R, H, check=False)
    target = induced_product(R_h, H, check=False)
    correction = ModuleMap.identity(R.module) + h.to_map().compose(R)
    phi = ModuleMap(source, target, correction.matrix)
    return check_algebra_morphism(source, target, phi, name="induced isomorphism")


def induced_iso_check(R: TRBOperator, H: Cochain, h: Cochain) -> CheckReport:
    """Perturb R by the 1-cocycle h and check the induced algebras are isomorphic."""
    perturbed = perturb_graph(R, H, h, "xi")
    return check_induced_iso(R, perturbed.operator, h, H)


def from_invertible_onecochain(h: Cochain, name: str = "R") -> Tuple[TRBOperator, Cochain]:
    """
    R = h^(-1) together with H = -dh.

    Raises:
        NotInvertibleError: if h is not invertible over QQ[D]
    """
    hmap = h.to_map()
    if hmap.source.rank != hmap.target.rank:
        raise NotInvertibleError(f"{h.name} maps rank {hmap.source.rank} to rank {hmap.target.rank}")
    R = TRBOperator.from_map(inverse(hmap), name)
    H = (-hochschild_delta(h)).renamed(f"-d{h.name}")
    return R, H
