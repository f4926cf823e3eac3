"""bracket, mc-residual and dR."""

from typing import Any, Dict, Optional

from conformal.reports import CheckReport
from linf import BINARY_ANCHOR, MC_ANCHOR, TERNARY_ANCHOR, d_R, derived_bracket, mc_residual, ternary_bracket

from ..codec import encode_value, with_values
from ..workspace import Workspace
from .common import result


def bracket_command(ws: Workspace, first: str, second: str, third: Optional[str] = None) -> Dict[str, Any]:
    """[[A, B]] or, with a third name, [[A, B, C]] built from H."""
    A, B = ws.u_cochain(first), ws.u_cochain(second)
    if third is None:
        value = derived_bracket(A, B)
        name, anchor = f"[{A.name},{B.name}]", BINARY_ANCHOR
    else:
        C = ws.u_cochain(third)
        value = ternary_bracket(A, B, C, ws.cocycle)
        name, anchor = f"[{A.name},{B.name},{C.name}]", TERNARY_ANCHOR
    data = {"name": name, "arity": value.arity, "anchor": anchor, "value": encode_value(value)}
    bundle = with_values(ws.bundle, cochains={name: value})
    return result("bracket", ws, [], data, bundle)


def mc_residual_command(ws: Workspace, op: str) -> Dict[str, Any]:
    """1/2 [[R,R]] - 1/6 [[R,R,R]]; passes iff it vanishes."""
    R = ws.operator(op)
    residual = mc_residual(R.as_cochain(), ws.cocycle)
    report = CheckReport(f"Maurer-Cartan ({op})", MC_ANCHOR)
    for key in residual.keys():
        report.record_zero("mc", residual.arg_names(key), residual.entry(key))
    name = f"mc({op})"
    bundle = with_values(ws.bundle, cochains={name: residual})
    return result("mc-residual", ws, [report], {"name": name, "value": encode_value(residual)}, bundle)


def d_r_command(ws: Workspace, op: str, cochain: str) -> Dict[str, Any]:
    R = ws.operator(op)
    g = ws.u_cochain(cochain)
    value = d_R(g, R.as_cochain(), ws.cocycle)
    name = f"d_R({g.name})"
    bundle = with_values(ws.bundle, cochains={name: value})
    return result("dR", ws, [], {"name": name, "arity": value.arity, "value": encode_value(value)}, bundle)
