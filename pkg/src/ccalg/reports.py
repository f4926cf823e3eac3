"""
Rendering command results as text or JSON.

Both encodings are deterministic: keys are sorted and nothing depends on
time or on dictionary insertion order.
"""

import json
from typing import Any, Dict, List

from .config.settings import settings
from .models import CheckModel, CommandReport

FORMATS = ("text", "json")


def to_model(outcome: Dict[str, Any]) -> CommandReport:
    return CommandReport(
        app=settings.app_name,
        version=settings.version,
        command=outcome["command"],
        source=outcome["source"],
        status="pass" if outcome["passed"] else "fail",
        checks=[CheckModel.model_validate(c) for c in outcome["checks"]],
        data=outcome["data"],
        bundle=outcome.get("bundle"),
    )


def render_json(outcome: Dict[str, Any]) -> str:
    model = to_model(outcome)
    return json.dumps(model.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True)


def _data_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value, key=str):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_data_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_data_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return lines
    return [f"{pad}{_scalar(value)}"]


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, list):
        return f"[{', '.join(_scalar(item) for item in value)}]"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def render_text(outcome: Dict[str, Any]) -> str:
    model = to_model(outcome)
    lines = [f"{model.app} {model.version} | {model.command} | {model.source}"]
    for check in model.checks:
        mark = "PASS" if check.passed else "FAIL"
        lines.append(f"[{mark}] {check.name} ({check.checked} checked)")
        lines.append(f"    anchor: {check.anchor}: {mark}")
        for witness in check.witnesses[:5]:
            lines.append(f"    witness {witness.label} ({', '.join(witness.args)}): {witness.residual}")
        if len(check.witnesses) > 5:
            lines.append(f"    ... {len(check.witnesses) - 5} more")
    if model.data:
        lines.append("data:")
        lines.extend(_data_lines(model.data, 1))
    lines.append(f"status: {model.status.upper()}")
    return "\n".join(lines)


def render_error(error: Dict[str, Any], output_format: str) -> str:
    if output_format == "json":
        return json.dumps(error, indent=2, sort_keys=True, default=str)
    lines = [f"error {error['error_code']} ({error['category']}): {error['error_message']}"]
    details = error.get("details", {})
    if "reason" in details:
        lines.append(f"  {details['reason']}")
    if "line" in details:
        lines.append(f"  line: {details['line']}")
    if "witness" in details:
        lines.append(f"  witness: ({', '.join(map(str, details['witness']))})")
    for check in details.get("checks", []):
        if not check["passed"] and check["witnesses"]:
            w = check["witnesses"][0]
            lines.append(f"  {check['name']} fails at ({', '.join(w['args'])}): {w['residual']}")
    for hint in error.get("suggestions", []):
        lines.append(f"  hint: {hint}")
    return "\n".join(lines)


def render(outcome: Dict[str, Any], output_format: str) -> str:
    if output_format not in FORMATS:
        raise ValueError(f"unknown format {output_format!r}; expected one of {FORMATS}")
    return render_json(outcome) if output_format == "json" else render_text(outcome)
