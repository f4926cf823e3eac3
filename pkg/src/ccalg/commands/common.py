"""Shared result shape for commands."""

from typing import Any, Dict, Iterable, Optional, Union

from conformal import ReportGroup
from conformal.reports import CheckReport

from ..models import Bundle
from ..workspace import Workspace

Check = Union[CheckReport, ReportGroup]


def flatten(checks: Iterable[Check]) -> list:
    """Check dictionaries; groups contribute one entry per part."""
    flat = []
    for check in checks:
        if isinstance(check, ReportGroup):
            for part in check.parts:
                entry = part.to_dict()
                entry["name"] = f"{check.name}: {part.name}"
                flat.append(entry)
        else:
            flat.append(check.to_dict())
    return flat


def result(
    command: str,
    ws: Workspace,
    checks: Iterable[Check] = (),
    data: Optional[Dict[str, Any]] = None,
    bundle: Optional[Bundle] = None,
) -> Dict[str, Any]:
    flat = flatten(checks)
    return {
        "status": "success",
        "command": command,
        "source": ws.source,
        "passed": all(c["passed"] for c in flat),
        "checks": flat,
        "data": data or {},
        "bundle": bundle,
    }
