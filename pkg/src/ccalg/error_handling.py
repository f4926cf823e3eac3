"""
Error classification for the CLI.

Every failure is mapped to an entry of ``ERROR_CODES`` and reported as a
``{"status": "error", ...}`` dictionary together with its exit code.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

from conformal.errors import ConformalError, SpaceMismatchError
from exactpoly import PolyError
from hochschild import CochainError
from trb import NotCocycleError, NotInvertibleError, NotTRBError

from .workspace import BundleParseError, BundleValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class ErrorSeverity(Enum):
    """Error severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(Enum):
    """Error categories"""
    PARSE = "parse"
    USAGE = "usage"
    VALIDATION = "validation"
    MATH_CHECK = "math_check"
    INTERNAL = "internal"


@dataclass
class CommandError:
    """Structured error information"""
    code: str
    message: str
    category: ErrorCategory
    severity: ErrorSeverity
    exit_code: int
    suggestions: Optional[List[str]] = None


ERROR_CODES: Dict[str, CommandError] = {
    "CA001": CommandError(
        code="CA001",
        message="The bundle file could not be parsed",
        category=ErrorCategory.PARSE,
        severity=ErrorSeverity.HIGH,
        exit_code=EXIT_USAGE,
        suggestions=[
            "Check the JSON syntax at the reported line",
            "Polynomials use D, L1, L2, ... with ^ for powers and num/den coefficients",
        ],
    ),
    "CA002": CommandError(
        code="CA002",
        message="Invalid command line",
        category=ErrorCategory.USAGE,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_USAGE,
        suggestions=["Run ccalg --help for the list of commands and options"],
    ),
    "CA003": CommandError(
        code="CA003",
        message="A name given on the command line is not defined in the bundle",
        category=ErrorCategory.USAGE,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_USAGE,
        suggestions=["List operators, cochains, elements and series in the bundle sections"],
    ),
    "CA004": CommandError(
        code="CA004",
        message="Shapes or spaces do not match",
        category=ErrorCategory.USAGE,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_USAGE,
        suggestions=["Check ranks, arities and which spaces each cochain lives on"],
    ),
    "CA010": CommandError(
        code="CA010",
        message="The bundle failed eager validation",
        category=ErrorCategory.VALIDATION,
        severity=ErrorSeverity.HIGH,
        exit_code=EXIT_CHECK_FAILED,
        suggestions=["Use --no-validate to load deliberately broken data"],
    ),
    "CA011": CommandError(
        code="CA011",
        message="The operator is not twisted Rota-Baxter for the given cocycle",
        category=ErrorCategory.MATH_CHECK,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_CHECK_FAILED,
        suggestions=["Run check-trb on the operator to see the failing pair"],
    ),
    "CA012": CommandError(
        code="CA012",
        message="The map is not invertible over QQ[D]",
        category=ErrorCategory.MATH_CHECK,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_CHECK_FAILED,
    ),
    "CA013": CommandError(
        code="CA013",
        message="The cochain is not a cocycle",
        category=ErrorCategory.MATH_CHECK,
        severity=ErrorSeverity.MEDIUM,
        exit_code=EXIT_CHECK_FAILED,
        suggestions=["Use mode phi, which accepts any 1-cochain"],
    ),
    "CA020": CommandError(
        code="CA020",
        message="Internal consistency check failed",
        category=ErrorCategory.INTERNAL,
        severity=ErrorSeverity.CRITICAL,
        exit_code=EXIT_CHECK_FAILED,
        suggestions=["Run with DEBUG=true and keep ccalg_debug.log"],
    ),
}


def classify_exception(exception: Exception) -> str:
    """Map an exception to an error code."""
    if isinstance(exception, BundleParseError):
        return "CA001"
    if isinstance(exception, BundleValidationError):
        return "CA010"
    if isinstance(exception, NotTRBError):
        return "CA011"
    if isinstance(exception, NotInvertibleError):
        return "CA012"
    if isinstance(exception, NotCocycleError):
        return "CA013"
    if isinstance(exception, KeyError):
        return "CA003"
    if isinstance(exception, (SpaceMismatchError, PolyError)):
        return "CA004"
    if isinstance(exception, (CochainError, ConformalError)):
        return "CA020"
    if isinstance(exception, ValueError):
        return "CA002"
    return "CA020"


def handle_error(
    error_code: str,
    exception: Optional[Exception] = None,
    context: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Build the structured error response for ``error_code``.

    Args:
        error_code: Key of ERROR_CODES
        exception: The exception being reported
        context: Command, file and other context

    Returns:
        Error dictionary including ``exit_code``
    """
    error = ERROR_CODES.get(error_code, ERROR_CODES["CA020"])
    details: Dict[str, Any] = {}
    if exception is not None:
        details["exception"] = type(exception).__name__
        details["reason"] = exception.args[0] if isinstance(exception, KeyError) and exception.args else str(exception)
        line = getattr(exception, "line", None)
        if line is not None:
            details["line"] = line
        witness = getattr(exception, "witness", None)
        if witness is not None:
            details["witness"] = list(witness)
        reports = getattr(exception, "reports", None)
        if reports:
            details["checks"] = [r.to_dict() for r in reports]
    response = {
        "status": "error",
        "error_code": error.code,
        "error_message": error.message,
        "category": error.category.value,
        "severity": error.severity.value,
        "exit_code": error.exit_code,
        "suggestions": error.suggestions or [],
        "context": context or {},
        "details": details,
    }
    log = logger.error if error.category is ErrorCategory.INTERNAL else logger.info
    log("Handled error %s: %s", error.code, details.get("reason", error.message))
    return response


def handle_exception(exception: Exception, context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    return handle_error(classify_exception(exception), exception, context)
