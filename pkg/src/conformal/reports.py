"""Check reports with failure witnesses."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .lambda_calculus import LambdaExpr


@dataclass
class Witness:
    """A violating basis tuple and the nonzero residual lhs - rhs."""
    label: str
    args: tuple
    residual: str

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "args": list(self.args), "residual": self.residual}


@dataclass
class CheckReport:
    """Outcome of one identity check over all basis tuples."""
    name: str
    anchor: str
    passed: bool = True
    checked: int = 0
    witnesses: List[Witness] = field(default_factory=list)

    def record(self, label: str, args: Sequence[str], lhs: LambdaExpr, rhs: LambdaExpr) -> bool:
        """Compare both sides; keep a witness when they differ."""
        self.checked += 1
        residual = lhs - rhs
        if residual.is_zero:
            return True
        self.passed = False
        self.witnesses.append(Witness(label, tuple(args), residual.to_text()))
        return False

    def record_zero(self, label: str, args: Sequence[str], value: LambdaExpr) -> bool:
        self.checked += 1
        if value.is_zero:
            return True
        self.passed = False
        self.witnesses.append(Witness(label, tuple(args), value.to_text()))
        return False

    def fail(self, label: str, args: Sequence[str], residual: str) -> None:
        self.passed = False
        self.witnesses.append(Witness(label, tuple(args), residual))

    @property
    def first_witness(self) -> Optional[Witness]:
        return self.witnesses[0] if self.witnesses else None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "checked": self.checked,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def combine(name: str, anchor: str, reports: Sequence[CheckReport]) -> CheckReport:
    """One report that passes iff all parts pass; witnesses are concatenated."""
    merged = CheckReport(name, anchor)
    for report in reports:
        merged.checked += report.checked
        merged.passed = merged.passed and report.passed
        merged.witnesses.extend(report.witnesses)
    return merged


@dataclass
class ReportGroup:
    """Several named checks reported together; passes iff every part passes."""
    name: str
    parts: List[CheckReport] = field(default_factory=list)

    def add(self, report: CheckReport) -> CheckReport:
        self.parts.append(report)
        return report

    @property
    def passed(self) -> bool:
        return all(part.passed for part in self.parts)

    @property
    def first_witness(self) -> Optional[Witness]:
        for part in self.parts:
            if not part.passed:
                return part.first_witness
        return None

    def part(self, name: str) -> CheckReport:
        for report in self.parts:
            if report.name == name:
                return report
        raise KeyError(name)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "parts": [p.to_dict() for p in self.parts]}
