"""
Exact multivariate polynomials over the rationals.

An ``MPoly`` lives in the ring QQ[D, L1, ..., Ln] where D stands for the
derivation and L1..Ln for the lambda variables of a conformal expression.
The number of L-variables is part of the value and operands with different
counts never mix silently.

The arithmetic itself is delegated to sympy's sparse polynomial rings; this
module adds the substitutions that encode sesquilinearity (L_j -> r,
D -> D + s, reindexing of the L-variables) and a stable text form.
"""

import logging
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.rings import PolyRing, ring

from .errors import PolyParseError, VariableCountError

logger = logging.getLogger(__name__)

Rat = type(QQ(0))
Scalar = Union[int, Fraction, Rat]
Exponents = Tuple[int, ...]

_ALLOWED_TEXT = re.compile(r"^[0-9DL+\-*/^()\s]*$")
_TRANSFORMS = standard_transformations + (convert_xor,)
_NAME = re.compile(r"D|L\d+")


def rat(numerator: Union[int, str, Fraction, Rat], denominator: int = 1) -> Rat:
    """Build an exact rational in lowest terms."""
    if isinstance(numerator, str):
        value = Fraction(numerator) / denominator
        return QQ(value.numerator, value.denominator)
    if isinstance(numerator, Fraction):
        value = numerator / denominator
        return QQ(value.numerator, value.denominator)
    if isinstance(numerator, Rat):
        return numerator / QQ(denominator)
    return QQ(numerator, denominator)


@lru_cache(maxsize=None)
def poly_ring(nvars: int) -> PolyRing:
    """The shared sympy ring QQ[D, L1..Ln] for a given variable count."""
    if nvars < 0:
        raise ValueError(f"negative variable count: {nvars}")
    names = ["D"] + [f"L{i}" for i in range(1, nvars + 1)]
    poly_ring_obj = ring(names, QQ)[0]
    return poly_ring_obj


def _to_rat(value: Scalar) -> Rat:
    if isinstance(value, Rat):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


class MPoly:
    """Immutable polynomial in D and L1..L{nvars} with rational coefficients."""

    __slots__ = ("nvars", "_p")

    def __init__(self, nvars: int, element=None):
        ring_obj = poly_ring(nvars)
        self.nvars = nvars
        if element is None:
            self._p = ring_obj.zero
        elif element.ring is ring_obj:
            self._p = element
        else:
            raise VariableCountError(len(element.ring.gens) - 1, nvars)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 0) -> "MPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int = 0) -> "MPoly":
        return cls.const(1, nvars)

    @classmethod
    def const(cls, value: Scalar, nvars: int = 0) -> "MPoly":
        ring_obj = poly_ring(nvars)
        return cls(nvars, ring_obj.ground_new(_to_rat(value)))

    @classmethod
    def D(cls, nvars: int = 0) -> "MPoly":
        return cls(nvars, poly_ring(nvars).gens[0])

    @classmethod
    def L(cls, j: int, nvars: int) -> "MPoly":
        if not 1 <= j <= nvars:
            raise IndexError(f"L{j} does not exist over {nvars} variables")
        return cls(nvars, poly_ring(nvars).gens[j])

    @classmethod
    def sum_L(cls, indices: Iterable[int], nvars: int) -> "MPoly":
        """L_{i1} + L_{i2} + ... (zero for an empty index set)."""
        total = cls(nvars)
        for j in indices:
            total = total + cls.L(j, nvars)
        return total

    @classmethod
    def from_terms(cls, nvars: int, terms: Dict[Exponents, Scalar]) -> "MPoly":
        ring_obj = poly_ring(nvars)
        cleaned = {}
        for exps, coeff in terms.items():
            if len(exps) != nvars + 1:
                raise VariableCountError(len(exps) - 1, nvars)
            value = _to_rat(coeff)
            if value:
                cleaned[tuple(exps)] = value
        return cls(nvars, ring_obj.from_dict(cleaned) if cleaned else ring_obj.zero)

    @classmethod
    def monomial(cls, exps: Exponents, coeff: Scalar = 1) -> "MPoly":
        return cls.from_terms(len(exps) - 1, {tuple(exps): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def ring(self) -> PolyRing:
        return self._p.ring

    @property
    def element(self):
        """The underlying sympy ring element."""
        return self._p

    @property
    def is_zero(self) -> bool:
        return not self._p

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._p.keys())

    def constant_value(self) -> Rat:
        """Coefficient of the constant monomial."""
        return self._p.get((0,) * (self.nvars + 1), QQ(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._p:
            return -1
        return max(sum(m) for m in self._p.keys())

    def terms(self) -> List[Tuple[Exponents, Rat]]:
        """Terms in canonical order: descending total degree, then D before L1 < L2."""
        return sorted(self._p.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def coeff(self, exps: Exponents) -> Rat:
        return self._p.get(tuple(exps), QQ(0))

    def uses_L(self, j: int) -> bool:
        return any(m[j] for m in self._p.keys())

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise VariableCountError(self.nvars, other.nvars)
            return other
        try:
            return MPoly.const(other, self.nvars)
        except TypeError:
            return None

    def __add__(self, other) -> "MPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MPoly(self.nvars, self._p + rhs._p)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MPoly(self.nvars, self._p - rhs._p)

    def __rsub__(self, other) -> "MPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return MPoly(self.nvars, lhs._p - self._p)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, -self._p)

    def __mul__(self, other) -> "MPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MPoly(self.nvars, self._p * rhs._p)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return MPoly(self.nvars, self._p ** exponent)

    def scale(self, factor: Scalar) -> "MPoly":
        return MPoly(self.nvars, self._p * _to_rat(factor))

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._p == other._p
        try:
            return self._p == MPoly.const(other, self.nvars)._p
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        # constants compare equal to their scalar, so they hash like it
        if self.is_constant:
            value = self.constant_value()
            return hash(Fraction(int(value.numerator), int(value.denominator)))
        return hash((self.nvars, frozenset(self._p.items())))

    # -- substitutions ----------------------------------------------------

    def homomorphism(self, target_nvars: int, images: Sequence["MPoly"]) -> "MPoly":
        """
        Ring map sending D to images[0] and L_k to images[k].

        Args:
            target_nvars: Variable count of the result ring
            images: One image per generator of this polynomial's ring

        Returns:
            The image polynomial over ``target_nvars`` variables
        """
        if len(images) != self.nvars + 1:
            raise VariableCountError(len(images) - 1, self.nvars)
        for image in images:
            if image.nvars != target_nvars:
                raise VariableCountError(image.nvars, target_nvars)

        target = poly_ring(target_nvars)
        result = target.zero
        powers: Dict[Tuple[int, int], object] = {}
        for monom, coeff in self._p.items():
            term = target.ground_new(coeff)
            for k, e in enumerate(monom):
                if not e:
                    continue
                key = (k, e)
                if key not in powers:
                    powers[key] = images[k]._p ** e
                term = term * powers[key]
            result += term
        return MPoly(target_nvars, result)

    def _generators(self) -> List["MPoly"]:
        return [MPoly.D(self.nvars)] + [MPoly.L(j, self.nvars) for j in range(1, self.nvars + 1)]

    def subst_L(self, j: int, form: "MPoly") -> "MPoly":
        """Replace every occurrence of L_j (1-based) by ``form``."""
        if not 1 <= j <= self.nvars:
            raise IndexError(f"L{j} out of range for {self.nvars} variables")
        if form.nvars != self.nvars:
            raise VariableCountError(self.nvars, form.nvars)
        images = self._generators()
        images[j] = form
        return self.homomorphism(self.nvars, images)

    def subst_D(self, form: "MPoly") -> "MPoly":
        """Replace D by ``form``."""
        if form.nvars != self.nvars:
            raise VariableCountError(self.nvars, form.nvars)
        images = self._generators()
        images[0] = form
        return self.homomorphism(self.nvars, images)

    def shift_D(self, s: "MPoly") -> "MPoly":
        """Replace D by D + s."""
        return self.subst_D(MPoly.D(self.nvars) + s)

    def extend_vars(self, n: int, positions: Sequence[int]) -> "MPoly":
        """
        Re-express over ``n`` variables, sending L_k to L_{positions[k-1]}.

        D is always fixed.
        """
        if len(positions) != self.nvars:
            raise VariableCountError(len(positions), self.nvars)
        if len(set(positions)) != len(positions):
            raise ValueError(f"reindexing is not injective: {list(positions)}")
        if any(not 1 <= p <= n for p in positions):
            raise IndexError(f"reindexing {list(positions)} leaves 1..{n}")
        images = [MPoly.D(n)] + [MPoly.L(p, n) for p in positions]
        return self.homomorphism(n, images)

    def embed(self, n: int, offset: int = 0) -> "MPoly":
        """Send L_k to L_{k+offset} inside a ring with ``n`` variables."""
        return self.extend_vars(n, [k + offset for k in range(1, self.nvars + 1)])

    def drop_vars(self, n: int) -> "MPoly":
        """Restrict to the first ``n`` L-variables; the others must not occur."""
        if n > self.nvars:
            return self.embed(n)
        for j in range(n + 1, self.nvars + 1):
            if self.uses_L(j):
                raise ValueError(f"L{j} still occurs, cannot restrict to {n} variables")
        truncated = {m[: n + 1]: c for m, c in self._p.items()}
        return MPoly.from_terms(n, truncated)

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {format_mpoly(self)!r})"


def _check_pair(a: MPoly, b: MPoly) -> None:
    if a.nvars != b.nvars:
        raise VariableCountError(a.nvars, b.nvars)


def add(a: MPoly, b: MPoly) -> MPoly:
    _check_pair(a, b)
    return a + b


def mul(a: MPoly, b: MPoly) -> MPoly:
    _check_pair(a, b)
    return a * b


def subst_L(p: MPoly, j: int, r: MPoly) -> MPoly:
    return p.subst_L(j, r)


def shift_D(p: MPoly, s: MPoly) -> MPoly:
    return p.shift_D(s)


def extend_vars(p: MPoly, n: int, positions: Sequence[int]) -> MPoly:
    return p.extend_vars(n, positions)


def _format_coeff(value: Rat) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(exps: Exponents) -> str:
    factors = []
    for k, e in enumerate(exps):
        if not e:
            continue
        name = "D" if k == 0 else f"L{k}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def format_mpoly(p: MPoly) -> str:
    """Canonical text, e.g. ``3/2*D^2*L1 - L2 + 1``."""
    pieces: List[str] = []
    for exps, coeff in p.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        monomial = _format_monomial(exps)
        if not monomial:
            body = _format_coeff(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coeff(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


def parse_mpoly(text: str, nvars: int, line: Optional[int] = None) -> MPoly:
    """
    Parse the text form of a polynomial over D, L1..L{nvars}.

    Whitespace is ignored, ``^`` and ``**`` both denote powers and
    coefficients may be written ``num`` or ``num/den``.

    Raises:
        PolyParseError: on syntax errors, unknown variables or non-polynomials
    """
    if not isinstance(text, str) or not text.strip():
        raise PolyParseError(str(text), "empty polynomial", line)
    if not _ALLOWED_TEXT.match(text):
        raise PolyParseError(text, "unexpected characters", line)

    ring_obj = poly_ring(nvars)
    try:
        names = {name: Symbol(name) for name in _NAME.findall(text)}
        expr = parse_expr(text, local_dict=names, transformations=_TRANSFORMS, evaluate=True)
        element = ring_obj.from_expr(expr)
    except (SyntaxError, TypeError, ValueError, ZeroDivisionError) as exc:
        logger.debug("polynomial parse failure for %r: %s", text, exc)
        raise PolyParseError(text, "not a polynomial in " + ", ".join(map(str, ring_obj.symbols)), line) from exc
    except Exception as exc:  # tokenizer errors surface with several types
        raise PolyParseError(text, str(exc), line) from exc
    return MPoly(nvars, element)
