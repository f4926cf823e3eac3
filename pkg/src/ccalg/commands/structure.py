"""validate and induce."""

import logging
from typing import Any, Dict

from conformal import check_associativity, check_bimodule
from trb import induced_bimodule, induced_product

from ..codec import encode_algebra, encode_bimodule
from ..models import BimoduleSpec, Bundle
from ..workspace import Workspace, validate_workspace
from .common import result

logger = logging.getLogger(__name__)


def validate_command(ws: Workspace) -> Dict[str, Any]:
    """Associativity of T, bimodule axioms for U and the cocycle condition on H."""
    reports = ws.validation or validate_workspace(ws)
    data = {
        "algebra": ws.algebra.name,
        "rank_T": ws.algebra.rank,
        "bimodule": ws.bimodule.name,
        "rank_U": ws.bimodule.rank,
        "operators": sorted(ws.operators),
    }
    return result("validate", ws, reports, data)


INDUCED_KINDS = ("product", "bimodule")


def induce_command(ws: Workspace, op: str, kind: str = "product") -> Dict[str, Any]:
    """
    ``product``: the algebra (U, *); the attached bundle has (U, *) acting on
    itself.  ``bimodule``: T^R over (U, *); the attached bundle has (U, *) as
    algebra and T^R as bimodule.
    """
    if kind not in INDUCED_KINDS:
        raise ValueError(f"unknown induced structure {kind!r}; expected one of {INDUCED_KINDS}")
    R = ws.operator(op)
    product = induced_product(R, ws.cocycle)
    algebra = encode_algebra(product)
    if kind == "product":
        names = [f"{n}'" for n in product.basis_names]
        bundle = Bundle(algebra=algebra, bimodule=BimoduleSpec(name=f"{product.name}-regular", basis=names, regular=True))
        checks = [check_associativity(product)]
        data = {"product": {f"{a.args[0]},{a.args[1]}": a.value for a in algebra.product}}
    else:
        module = induced_bimodule(R, ws.cocycle, product, check=False)
        bundle = Bundle(algebra=algebra, bimodule=encode_bimodule(module))
        checks = [check_bimodule(product, module)]
        data = {
            "left": {f"{e.args[0]},{e.args[1]}": e.value for e in bundle.bimodule.left},
            "right": {f"{e.args[0]},{e.args[1]}": e.value for e in bundle.bimodule.right},
        }
    logger.info("induced %s from %s", kind, op)
    return result(f"induce {kind}", ws, checks, data, bundle)
