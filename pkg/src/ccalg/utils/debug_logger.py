"""
Logging setup for the CLI and a step tracer for the bundle loader.

``configure_logging`` is called once per CLI invocation; with DEBUG=true
every ``debug_step`` call is also written to ``ccalg_debug.log``.
"""

import json
import logging
from typing import Any, Optional

from ..config.settings import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEBUG_FILE = "ccalg_debug.log"

logger = logging.getLogger("CCALG_DEBUG")


def configure_logging(level: Optional[str] = None, debug: Optional[bool] = None) -> None:
    """Configure the root logger from settings unless overridden."""
    debug = settings.debug_mode if debug is None else debug
    level_name = "DEBUG" if debug else (level or settings.log_level)
    handlers = [logging.StreamHandler()]
    if debug:
        handlers.append(logging.FileHandler(DEBUG_FILE, mode="a", encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, level_name.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def debug_step(
    function_name: str,
    step_name: str,
    input_value: Any,
    output_value: Any = None,
    success: Optional[bool] = None,
    error: Optional[str] = None,
) -> None:
    """
    Record one loader step.

    Args:
        function_name: Calling function
        step_name: Step inside the function
        input_value: What the step consumed
        output_value: What it produced
        success: Outcome, None while in progress
        error: Error message on failure
    """
    if not settings.debug_mode and not logger.isEnabledFor(logging.DEBUG):
        return
    info = {
        "function": function_name,
        "step": step_name,
        "input": _safe_repr(input_value),
        "input_type": type(input_value).__name__,
        "output": _safe_repr(output_value) if output_value is not None else None,
        "success": success,
        "error": error,
    }
    status = "ok" if success else "failed" if success is False else "step"
    logger.debug("%s %s", status.upper(), json.dumps(info, ensure_ascii=False, indent=2))


def _safe_repr(value: Any) -> str:
    try:
        if isinstance(value, str):
            if len(value) > 100:
                return f"{value[:100]!r}... (length: {len(value)})"
            return repr(value)
        if isinstance(value, (list, tuple)):
            if len(value) > 10:
                return f"{type(value).__name__}[{len(value)} items]: {value[:3]!r}..."
            return repr(value)
        if isinstance(value, dict):
            if len(value) > 10:
                return f"dict[{len(value)} keys]: {list(value)[:3]}..."
            return repr(value)
        return repr(value)
    except Exception:
        return f"<{type(value).__name__} object>"
