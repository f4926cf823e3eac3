"""deform linear/formal/equiv, nijenhuis and rigidity."""

import logging
from typing import Any, Dict, Optional

from conformal.reports import CheckReport
from deform import (
    RIGIDITY_ANCHOR,
    SOLVED_NIJENHUIS,
    check_formal_deformation,
    check_linear_deformation,
    check_linear_equivalence,
    is_nijenhuis,
    rigidity_witness,
)

from ..workspace import Workspace
from .common import result

logger = logging.getLogger(__name__)


def deform_linear_command(ws: Workspace, op: str, op1: str) -> Dict[str, Any]:
    group = check_linear_deformation(ws.operator(op), ws.operator(op1), ws.cocycle)
    return result("deform linear", ws, [group])


def deform_formal_command(ws: Workspace, series: str, order: Optional[int] = None) -> Dict[str, Any]:
    """Deformation equations up to ``order`` (default: the length of the series)."""
    S = ws.deformation(series)
    up_to = S.order if order is None else order
    group = check_formal_deformation(S, ws.cocycle, up_to)
    return result("deform formal", ws, [group], {"series": series, "order": up_to})


def deform_equiv_command(ws: Workspace, op: str, op1: str, op1_prime: str, element: str) -> Dict[str, Any]:
    group = check_linear_equivalence(
        ws.operator(op), ws.operator(op1), ws.operator(op1_prime), ws.cocycle, ws.element(element)
    )
    return result("deform equiv", ws, [group], {"element": element})


def nijenhuis_command(ws: Workspace, op: str, element: str) -> Dict[str, Any]:
    group = is_nijenhuis(ws.element(element), ws.operator(op), ws.cocycle)
    return result("nijenhuis", ws, [group], {"element": element, "nijenhuis": group.passed})


def rigidity_command(
    ws: Workspace, op: str, trunc: Optional[int] = None, threads: Optional[int] = None
) -> Dict[str, Any]:
    report = rigidity_witness(ws.operator(op), ws.cocycle, ws.truncation(trunc), ws.threads(threads))
    verdict = CheckReport("rigidity", RIGIDITY_ANCHOR, passed=report.witnessed, checked=len(report.entries))
    for entry in report.entries:
        if entry.status != SOLVED_NIJENHUIS:
            verdict.fail(entry.status, (f"z{entry.index}",), entry.to_dict()["preimage"] or "no preimage")
    return result("rigidity", ws, [verdict], report.to_dict())
