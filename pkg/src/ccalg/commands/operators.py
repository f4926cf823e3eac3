"""Commands about a single operator: check-trb, graph-check, twisted-delta, cohomology."""

import logging
from typing import Any, Dict, Optional

from conformal.reports import CheckReport
from linf import d_R
from trb import check_trb, cohomology, graph_check, twisted_delta
from trb.twisted import TWISTED_ANCHOR

from ..codec import encode_value, with_values
from ..workspace import Workspace
from .common import result

logger = logging.getLogger(__name__)

AGREEMENT_ANCHOR = "graph closed under the twisted product <=> twisted Rota-Baxter identity"


def check_trb_command(ws: Workspace, op: str) -> Dict[str, Any]:
    report = check_trb(ws.operator(op), ws.cocycle)
    return result("check-trb", ws, [report])


def graph_check_command(ws: Workspace, op: str) -> Dict[str, Any]:
    """Graph closure, plus a check that it agrees with the direct identity."""
    R = ws.operator(op)
    graph = graph_check(R, ws.cocycle)
    direct = check_trb(R, ws.cocycle)
    agreement = CheckReport("graph agrees with check_trb", AGREEMENT_ANCHOR, checked=1)
    if graph.passed != direct.passed:
        logger.error("graph check and check_trb disagree for %s", op)
        agreement.fail("agreement", (R.name,), f"graph closed: {graph.passed}, identity holds: {direct.passed}")
    data = {"check_trb": direct.passed, "agrees": agreement.passed}
    return result("graph-check", ws, [graph, agreement], data)


def twisted_delta_command(ws: Workspace, op: str, cochain: str) -> Dict[str, Any]:
    """The seven-term coboundary of ``cochain``, compared with (-1)^m d_R."""
    R, H = ws.operator(op), ws.cocycle
    g = ws.u_cochain(cochain)
    dg = twisted_delta(g, R, H)
    via_linf = d_R(g, R.as_cochain(), H, check=False)
    sign = CheckReport("twisted coboundary vs d_R", TWISTED_ANCHOR)
    expected = dg if g.arity % 2 == 0 else -dg
    residual = via_linf - expected
    for key in residual.keys():
        sign.record_zero("sign", residual.arg_names(key), residual.entry(key))
    name = f"d{g.name}"
    bundle = with_values(ws.bundle, cochains={name: dg})
    return result("twisted-delta", ws, [sign], {"name": name, "value": encode_value(dg)}, bundle)


def cohomology_command(
    ws: Workspace, op: str, degree: int, trunc: Optional[int] = None, route: str = "twisted", threads: Optional[int] = None
) -> Dict[str, Any]:
    report = cohomology(ws.operator(op), ws.cocycle, degree, ws.truncation(trunc), route, ws.threads(threads))
    return result("cohomology", ws, [], report.to_dict())
