"""twist-coboundary, perturb and from-inverse."""

from typing import Any, Dict

from trb import check_trb, check_induced_iso, from_invertible_onecochain, perturb_graph, twist_by_coboundary

from ..codec import encode_operator, encode_value, with_values
from ..workspace import Workspace
from .common import result


def twist_coboundary_command(ws: Workspace, cochain: str) -> Dict[str, Any]:
    """H + dh for a 1-cochain h: T -> U, and the isomorphism check of the semidirect products."""
    h = ws.t_cochain(cochain)
    twisted, report = twist_by_coboundary(ws.cocycle, h)
    bundle = with_values(ws.bundle, cocycle=twisted)
    return result("twist-coboundary", ws, [report], {"cocycle": encode_value(twisted)}, bundle)


def perturb_command(ws: Workspace, op: str, cochain: str, mode: str = "xi") -> Dict[str, Any]:
    """
    Move the graph of R by h.  In mode ``xi`` the induced algebras of R and
    the new operator are also compared.
    """
    R = ws.operator(op)
    h = ws.t_cochain(cochain)
    perturbation = perturb_graph(R, ws.cocycle, h, mode)
    new = perturbation.operator
    checks = [perturbation.report]
    if mode == "xi" and perturbation.report.passed:
        checks.append(check_induced_iso(R, new, h, ws.cocycle))
    bundle = with_values(ws.bundle, operators={new.name: new}, cocycle=perturbation.cocycle)
    data = {"operator": new.name, "matrix": encode_operator(new).matrix, "mode": mode}
    if mode == "phi":
        data["cocycle"] = encode_value(perturbation.cocycle)
    return result("perturb", ws, checks, data, bundle)


def from_inverse_command(ws: Workspace, cochain: str, name: str = "R") -> Dict[str, Any]:
    """R = h^(-1) with H = -dh; the attached bundle replaces the cocycle."""
    h = ws.t_cochain(cochain)
    R, H = from_invertible_onecochain(h, name)
    report = check_trb(R, H)
    bundle = with_values(ws.bundle, operators={name: R}, cocycle=H)
    data = {"operator": name, "matrix": encode_operator(R).matrix, "cocycle": encode_value(H)}
    return result("from-inverse", ws, [report], data, bundle)
