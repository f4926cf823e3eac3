"""
Loading bundle files into a validated workspace.

Loading is eager: associativity of T, the bimodule axioms and the cocycle
condition on H are checked unless validation is switched off.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from conformal import (
    ConformalAlgebra,
    ConformalBimodule,
    LambdaExpr,
    check_associativity,
    check_bimodule,
)
from conformal.errors import ConformalError
from conformal.reports import CheckReport
from deform import DeformationSeries
from exactpoly import PolyParseError
from hochschild import Cochain, CochainError, is_two_cocycle
from linf import UCochain
from trb import TRBOperator

from .codec import decode_algebra, decode_bimodule, decode_cochain, decode_element, decode_matrix, decode_operator
from .config.settings import settings
from .models import Bundle
from .utils.debug_logger import debug_step

logger = logging.getLogger(__name__)


class BundleError(Exception):
    """Base class for bundle loading failures."""


class BundleParseError(BundleError):
    """The file is not a well-formed bundle; ``line`` points into the file when known."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = ""):
        where = f"{source}:{line}: " if line is not None else (f"{source}: " if source else "")
        super().__init__(f"{where}{message}")
        self.line = line
        self.source = source


class BundleValidationError(BundleError):
    """Eager validation found a failing axiom."""

    def __init__(self, message: str, reports: List[CheckReport]):
        super().__init__(message)
        self.reports = reports


@dataclass
class Workspace:
    """Everything one bundle file defines."""
    algebra: ConformalAlgebra
    bimodule: ConformalBimodule
    cocycle: Cochain
    bundle: Bundle
    operators: Dict[str, TRBOperator] = field(default_factory=dict)
    cochains: Dict[str, Cochain] = field(default_factory=dict)
    elements: Dict[str, LambdaExpr] = field(default_factory=dict)
    series: Dict[str, DeformationSeries] = field(default_factory=dict)
    validation: List[CheckReport] = field(default_factory=list)
    source: str = ""

    @property
    def validated(self) -> bool:
        return bool(self.validation) and all(r.passed for r in self.validation)

    def operator(self, name: str) -> TRBOperator:
        if name not in self.operators:
            raise KeyError(f"no operator named {name!r} (have: {', '.join(sorted(self.operators)) or 'none'})")
        return self.operators[name]

    def cochain(self, name: str) -> Cochain:
        """A named cochain; operator names resolve to their 1-cochains."""
        if name in self.cochains:
            return self.cochains[name]
        if name in self.operators:
            return self.operators[name].as_cochain()
        raise KeyError(f"no cochain or operator named {name!r}")

    def u_cochain(self, name: str) -> UCochain:
        c = self.cochain(name)
        if not isinstance(c, UCochain):
            raise KeyError(f"{name!r} is not a cochain on {self.bimodule.name} with values in {self.algebra.name}")
        return c

    def t_cochain(self, name: str) -> Cochain:
        c = self.cochain(name)
        if isinstance(c, UCochain):
            raise KeyError(f"{name!r} is not a cochain on {self.algebra.name} with values in {self.bimodule.name}")
        return c

    def element(self, name: str) -> LambdaExpr:
        if name not in self.elements:
            raise KeyError(f"no element named {name!r}")
        return self.elements[name]

    def deformation(self, name: str) -> DeformationSeries:
        if name not in self.series:
            raise KeyError(f"no series named {name!r}")
        return self.series[name]

    def truncation(self, flag: Optional[int] = None) -> int:
        """CLI flag, then bundle options, then the environment default."""
        if flag is not None:
            return flag
        if self.bundle.options.truncation is not None:
            return self.bundle.options.truncation
        return settings.truncation

    def threads(self, flag: Optional[int] = None) -> int:
        if flag is not None:
            return flag
        if self.bundle.options.threads is not None:
            return self.bundle.options.threads
        return settings.threads

    def output_format(self, flag: Optional[str] = None) -> str:
        if flag is not None:
            return flag
        if self.bundle.options.format is not None:
            return self.bundle.options.format
        return settings.output_format


def _line_of(raw: str, needle: str) -> Optional[int]:
    """First line of ``raw`` containing ``needle`` as a JSON string, 1-based."""
    quoted = json.dumps(needle)
    for number, line in enumerate(raw.splitlines(), start=1):
        if quoted in line:
            return number
    return None


def _bundle_data(data: dict) -> dict:
    # JSON reports carry their value as a complete bundle
    if isinstance(data, dict) and "bundle" in data and "command" in data:
        if data["bundle"] is None:
            raise BundleParseError("report has no bundle attached")
        return data["bundle"]
    return data


def parse_bundle(raw: str, source: str = "<string>") -> Bundle:
    """
    Parse bundle text.

    Raises:
        BundleParseError: on JSON syntax errors or schema violations
    """
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BundleParseError(exc.msg, exc.lineno, source) from exc
    try:
        return Bundle.model_validate(_bundle_data(data))
    except ValidationError as exc:
        error = exc.errors()[0]
        keys = [str(k) for k in error["loc"] if isinstance(k, str)]
        line = _line_of(raw, keys[-1]) if keys else None
        location = ".".join(str(k) for k in error["loc"])
        raise BundleParseError(f"{location}: {error['msg']}", line, source) from exc


def build_workspace(bundle: Bundle, raw: str = "", source: str = "<string>") -> Workspace:
    """
    Decode every section of a parsed bundle.

    Raises:
        BundleParseError: bad polynomial text or inconsistent shapes
    """
    try:
        T = decode_algebra(bundle.algebra)
        U = decode_bimodule(bundle.bimodule, T)
        debug_step("build_workspace", "spaces", bundle.algebra.name, f"{T!r} {U!r}", True)

        if bundle.cocycle is None:
            H = Cochain.zero([T, T], U, "H")
        else:
            if bundle.cocycle.on != "T" or bundle.cocycle.arity != 2:
                raise BundleParseError("cocycle must be a 2-cochain on T with values in U", _line_of(raw, "cocycle"), source)
            H = decode_cochain(bundle.cocycle, U, "H")

        operators = {name: decode_operator(spec, U, name) for name, spec in sorted(bundle.operators.items())}
        cochains = {name: decode_cochain(spec, U, name) for name, spec in sorted(bundle.cochains.items())}
        elements = {name: decode_element(values, T, name) for name, values in sorted(bundle.elements.items())}

        series = {}
        for name, spec in sorted(bundle.series.items()):
            terms = sorted(spec.terms, key=lambda t: t.power)
            powers = [t.power for t in terms]
            if powers != list(range(len(terms))):
                raise BundleParseError(f"series {name} must list powers 0..N once each", _line_of(raw, name), source)
            coefficients = []
            for term in terms:
                if term.operator is not None:
                    if term.operator not in operators:
                        raise BundleParseError(f"series {name} names unknown operator {term.operator}", _line_of(raw, term.operator), source)
                    coefficients.append(operators[term.operator])
                else:
                    coefficients.append(decode_matrix(term.matrix, U, f"{name}_{term.power}"))
            series[name] = DeformationSeries(coefficients)
        debug_step("build_workspace", "sections", sorted(bundle.operators), sorted(operators), True)
    except PolyParseError as exc:
        debug_step("build_workspace", "polynomial", exc.text, success=False, error=exc.reason)
        raise BundleParseError(str(exc), _line_of(raw, exc.text), source) from exc
    except (ConformalError, CochainError) as exc:
        raise BundleParseError(str(exc), None, source) from exc

    return Workspace(T, U, H, bundle, operators, cochains, elements, series, source=source)


def validate_workspace(ws: Workspace) -> List[CheckReport]:
    """Associativity, bimodule axioms and the cocycle condition, in that order."""
    reports = [check_associativity(ws.algebra), check_bimodule(ws.algebra, ws.bimodule), is_two_cocycle(ws.cocycle)]
    ws.validation = reports
    return reports


def load(path: Union[str, Path], validate: Optional[bool] = None) -> Workspace:
    """
    Load and (by default) validate a bundle file.

    Args:
        path: Bundle JSON, or a JSON report carrying a bundle
        validate: Run the eager checks; defaults to CCALG_VALIDATE

    Raises:
        BundleParseError: unreadable file, malformed JSON, schema or polynomial errors
        BundleValidationError: a structure axiom fails
    """
    path = Path(path)
    source = str(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BundleParseError(f"cannot read file: {exc.strerror}", None, source) from exc
    bundle = parse_bundle(raw, source)
    ws = build_workspace(bundle, raw, source)

    if validate if validate is not None else settings.validate_on_load:
        reports = validate_workspace(ws)
        failed = [r for r in reports if not r.passed]
        if failed:
            first = failed[0]
            logger.warning("validation of %s failed: %s", source, first.name)
            raise BundleValidationError(f"{source}: {first.name} fails at {first.first_witness.args}", reports)
    logger.info("loaded %s", source)
    return ws
