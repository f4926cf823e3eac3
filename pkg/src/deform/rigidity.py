"""
Truncated rigidity witnesses.

Every 1-cocycle of a basis of Z^1 at truncation d is written as d_R(p) for
some p in T of degree <= d, and p is tested for being a Nijenhuis element.
The verdict is only ever "witnessed at degree d".
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from conformal import LambdaExpr
from hochschild import Cochain, CochainError
from linf import UCochain, d_R
from trb import TRBOperator, cocycle_basis, require_trb, solve_coboundary

from .nijenhuis import is_nijenhuis

logger = logging.getLogger(__name__)

SOLVED_NIJENHUIS = "solved+nijenhuis"
SOLVED_NOT_NIJENHUIS = "solved-not-nijenhuis"
UNSOLVED = "unsolved-at-this-truncation"
RIGIDITY_ANCHOR = "Z^1 = d_R(Nij(R))"


@dataclass
class RigidityEntry:
    index: int
    cocycle: UCochain
    status: str
    preimage: Optional[LambdaExpr] = None

    def to_dict(self) -> Dict[str, Any]:
        rows = {
            ",".join(self.cocycle.arg_names(key)): self.cocycle.entry(key).to_text()
            for key in sorted(self.cocycle.table)
        }
        return {
            "index": self.index,
            "cocycle": rows,
            "status": self.status,
            "preimage": self.preimage.to_text() if self.preimage is not None else None,
        }


@dataclass
class RigidityReport:
    truncation: int
    entries: List[RigidityEntry] = field(default_factory=list)

    @property
    def witnessed(self) -> bool:
        return all(e.status == SOLVED_NIJENHUIS for e in self.entries)

    @property
    def verdict(self) -> str:
        if self.witnessed:
            return f"rigidity witnessed at degree {self.truncation}"
        return f"rigidity not witnessed at degree {self.truncation}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "truncation": self.truncation,
            "anchor": RIGIDITY_ANCHOR,
            "witnessed": self.witnessed,
            "verdict": self.verdict,
            "entries": [e.to_dict() for e in self.entries],
        }


def _resolve(index: int, z: UCochain, R: TRBOperator, H: Cochain, d: int) -> RigidityEntry:
    solution = solve_coboundary(R, H, z, d)
    if solution is None:
        return RigidityEntry(index, z, UNSOLVED)
    if d_R(solution, R.as_cochain(), H, check=False) != z:
        logger.error("solver returned p with d_R(p) != z%d", index)
        raise CochainError(f"coboundary solve for z{index} does not verify")
    p = solution.element()
    status = SOLVED_NIJENHUIS if is_nijenhuis(p, R, H).passed else SOLVED_NOT_NIJENHUIS
    return RigidityEntry(index, z, status, p)


def rigidity_witness(R: TRBOperator, H: Cochain, d: int, threads: int = 1) -> RigidityReport:
    """
    Resolve a basis of the truncated 1-cocycles into Nijenhuis coboundaries.

    Args:
        R: The operator
        H: Its twisting cocycle
        d: Truncation degree
        threads: Worker threads for the per-cocycle solves

    Returns:
        RigidityReport ordered by basis index
    """
    if d < 0:
        raise ValueError("truncation must be nonnegative")
    require_trb(R, H)
    basis = cocycle_basis(R, H, 1, d, threads=threads)
    jobs = list(enumerate(basis, start=1))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(lambda job: _resolve(job[0], job[1], R, H, d), jobs))
    else:
        entries = [_resolve(i, z, R, H, d) for i, z in jobs]
    report = RigidityReport(d, entries)
    logger.info("%s (%d cocycles)", report.verdict, len(entries))
    return report
