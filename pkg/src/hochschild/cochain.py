"""
Conformal Hochschild cochains stored on basis tuples.

An n-cochain f has argument spaces X_1..X_n and a target Y; its table maps a
basis tuple (k_1, ..., k_n) to f_{L1..L(n-1)}(x_k1, ..., x_kn) in Y[L1..L(n-1)].
Evaluation on general arguments is fixed by sesquilinearity (see
``conformal.lambda_calculus.apply_table``).

Composition and the Gerstenhaber bracket follow the insertion rule: inserting
g into slot i of f puts g's arguments at consecutive composite positions, and
f's lambda at that slot becomes the sum of the composite variables of those
positions.
"""

import itertools
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from conformal import ConformalAlgebra, ConformalBimodule, LambdaExpr, ModuleMap, Table
from conformal.errors import SpaceMismatchError
from conformal.lambda_calculus import apply_table, normalize_table, table_degree
from exactpoly import MPoly

from .errors import CochainError

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]


class Cochain:
    """
    n-cochain with per-slot argument spaces and a target space.

    Attributes:
        arg_spaces: Space of each argument, left to right
        target: Space of the values
        table: Basis tuple -> coefficient vector over L1..L{n-1}
        name: Label used in reports
    """

    def __init__(self, arg_spaces: Sequence, target, table: Table, name: str = "f"):
        self.arg_spaces = tuple(arg_spaces)
        self.target = target
        self.name = name
        for key in table:
            if len(key) != len(self.arg_spaces):
                raise CochainError(f"key {key} does not have arity {len(self.arg_spaces)}")
            for k, space in zip(key, self.arg_spaces):
                if not 0 <= k < space.rank:
                    raise SpaceMismatchError(f"index {k} outside {space.name} (rank {space.rank})")
        self.table = normalize_table(table, self.arity, target.rank)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, arg_spaces: Sequence, target, name: str = "0") -> "Cochain":
        return cls(arg_spaces, target, {}, name)

    @classmethod
    def identity(cls, space, name: str = "id") -> "Cochain":
        table = {(a,): LambdaExpr.basis(space, a, 0).coeffs for a in range(space.rank)}
        return cls((space,), space, table, name)

    @classmethod
    def from_map(cls, phi: ModuleMap, name: str = "h") -> "Cochain":
        """The 1-cochain of a C[D]-linear map."""
        table = {(a,): phi.column(a).coeffs for a in range(phi.source.rank)}
        return cls((phi.source,), phi.target, table, name)

    @classmethod
    def from_element(cls, x: LambdaExpr, name: str = "p") -> "Cochain":
        """A 0-cochain is an element of the target."""
        if x.nvars != 0:
            raise CochainError("a 0-cochain carries no lambda variables")
        return cls((), x.space, {(): x.coeffs}, name)

    # -- inspection -------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.arg_spaces)

    @property
    def nvars(self) -> int:
        return max(self.arity - 1, 0)

    def keys(self) -> Iterable[Key]:
        """Every basis tuple, in lexicographic order."""
        return itertools.product(*(range(space.rank) for space in self.arg_spaces))

    def entry(self, key: Sequence[int]) -> LambdaExpr:
        vector = self.table.get(tuple(key))
        if vector is None:
            return LambdaExpr.zero(self.target, self.nvars)
        return LambdaExpr(self.target, self.nvars, vector)

    def element(self) -> LambdaExpr:
        """Value of a 0-cochain."""
        if self.arity != 0:
            raise CochainError(f"{self.name} has arity {self.arity}, not 0")
        return self.entry(())

    def to_map(self) -> ModuleMap:
        """Matrix of a 1-cochain."""
        if self.arity != 1:
            raise CochainError(f"{self.name} has arity {self.arity}, not 1")
        source = self.arg_spaces[0]
        matrix = [[self.entry((a,)).coeffs[i] for a in range(source.rank)] for i in range(self.target.rank)]
        return ModuleMap(source, self.target, matrix)

    @property
    def is_zero(self) -> bool:
        return not self.table

    def max_degree(self) -> int:
        return table_degree(self.table)

    def same_shape(self, other: "Cochain") -> bool:
        return (
            len(self.arg_spaces) == len(other.arg_spaces)
            and all(a is b for a, b in zip(self.arg_spaces, other.arg_spaces))
            and self.target is other.target
        )

    def arg_names(self, key: Sequence[int]) -> Tuple[str, ...]:
        return tuple(space.basis_names[k] for space, k in zip(self.arg_spaces, key))

    # -- evaluation -------------------------------------------------------

    def apply(self, args: Sequence[LambdaExpr], slots: Sequence[MPoly], nvars: int) -> LambdaExpr:
        """Evaluate with explicit lambda-forms for the non-final slots."""
        for arg, space in zip(args, self.arg_spaces):
            if arg.space is not space:
                raise SpaceMismatchError(f"{self.name} expects {space.name}, got {arg.space.name}")
        return apply_table(self.table, self.arity, self.target, args, slots, nvars)

    def evaluate(self, args: Sequence[LambdaExpr], var_base: int = 1, nvars: Optional[int] = None) -> LambdaExpr:
        """
        f_{L_b, ..., L_(b+n-2)}(args) with b = ``var_base``.

        Args:
            args: One element (or lambda-expression) per slot
            var_base: Index of the variable attached to the first slot
            nvars: Variable count of the result; defaults to the smallest ring
                that holds both the arguments and the slot variables

        Returns:
            The value as a LambdaExpr
        """
        if len(args) != self.arity:
            raise CochainError(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        needed = var_base + self.arity - 2 if self.arity > 1 else 0
        n = nvars if nvars is not None else max([needed] + [a.nvars for a in args])
        lifted = [a if a.nvars == n else a.embed(n) for a in args]
        slots = [MPoly.L(var_base + j, n) for j in range(self.arity - 1)]
        return self.apply(lifted, slots, n)

    # -- linear structure -------------------------------------------------

    def _check(self, other: "Cochain") -> None:
        if not self.same_shape(other):
            raise SpaceMismatchError(f"cochains {self.name} and {other.name} live on different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        table = dict(self.table)
        for key, vector in other.table.items():
            if key in table:
                table[key] = tuple(a + b for a, b in zip(table[key], vector))
            else:
                table[key] = vector
        return self._rebuild(table, self.name)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def scale(self, factor) -> "Cochain":
        table = {key: tuple(c * factor for c in vector) for key, vector in self.table.items()}
        return self._rebuild(table, self.name)

    def renamed(self, name: str) -> "Cochain":
        return self._rebuild(self.table, name)

    def _rebuild(self, table: Table, name: str) -> "Cochain":
        return Cochain(self.arg_spaces, self.target, table, name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.same_shape(other) and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.arity, id(self.target), frozenset(self.table.items())))

    def __repr__(self) -> str:
        spaces = ",".join(space.name for space in self.arg_spaces)
        return f"Cochain({self.name}: ({spaces}) -> {self.target.name}, {len(self.table)} entries)"


def product_cochain(T: ConformalAlgebra, name: str = "mu") -> Cochain:
    """The lambda-product of T as a 2-cochain with values in T."""
    return Cochain((T, T), T, dict(T.product), name)


def left_action_cochain(U: ConformalBimodule, name: str = "l") -> Cochain:
    """(p, u) -> p_L1 u on T x U."""
    return Cochain((U.over, U), U, dict(U.left), name)


def right_action_cochain(U: ConformalBimodule, name: str = "r") -> Cochain:
    """(u, p) -> u_L1 p on U x T."""
    return Cochain((U, U.over), U, dict(U.right), name)


def _composite_variable(k: int, nvars: int) -> MPoly:
    """
    Lambda of composite position k.

    The last position has no variable of its own; when one is needed it is
    -D minus the sum of all the others.
    """
    if k <= nvars:
        return MPoly.L(k, nvars)
    return -MPoly.D(nvars) - MPoly.sum_L(range(1, nvars + 1), nvars)


def compose_at(f: Cochain, g: Cochain, i: int, keys: Optional[Iterable[Key]] = None) -> Cochain:
    """
    Insert g into slot i (1-based) of f.

    The composite has arity m + n - 1.  g's arguments sit at positions
    i..i+n-1; f's slot i carries the sum of their variables, so g's output D
    becomes minus that sum for an interior slot and D plus the sum of f's
    other slot variables for the last slot.

    Args:
        f: Outer cochain of arity m
        g: Inner cochain of arity n whose target is f's i-th argument space
        i: Slot of f receiving g
        keys: Optional subset of composite basis tuples to compute

    Returns:
        The composite cochain
    """
    m, n = f.arity, g.arity
    if not 1 <= i <= m:
        raise CochainError(f"slot {i} outside 1..{m}")
    if g.target is not f.arg_spaces[i - 1]:
        raise SpaceMismatchError(
            f"{g.name} lands in {g.target.name}, slot {i} of {f.name} takes {f.arg_spaces[i - 1].name}"
        )
    arity = m + n - 1
    nvars = max(arity - 1, 0)
    spaces = f.arg_spaces[: i - 1] + g.arg_spaces + f.arg_spaces[i:]

    slots: List[MPoly] = []
    for j in range(1, m):
        if j < i:
            slots.append(_composite_variable(j, nvars))
        elif j == i:
            slots.append(MPoly.sum_L(range(i, i + n), nvars))
        else:
            slots.append(_composite_variable(j + n - 1, nvars))
    g_images = [MPoly.D(nvars)] + [_composite_variable(i + j - 1, nvars) for j in range(1, n)]

    if keys is None:
        keys = itertools.product(*(range(space.rank) for space in spaces))

    inner_values = {}
    table: Table = {}
    for key in keys:
        key = tuple(key)
        g_key = key[i - 1 : i - 1 + n]
        if g_key not in inner_values:
            vector = g.table.get(g_key)
            inner_values[g_key] = (
                None
                if vector is None
                else LambdaExpr(g.target, nvars, tuple(c.homomorphism(nvars, g_images) for c in vector))
            )
        inner = inner_values[g_key]
        if inner is None:
            continue
        args = [LambdaExpr.basis(spaces[p], key[p], nvars) for p in range(i - 1)]
        args.append(inner)
        args.extend(LambdaExpr.basis(spaces[p], key[p], nvars) for p in range(i - 1 + n, arity))
        value = apply_table(f.table, m, f.target, args, slots, nvars)
        if not value.is_zero:
            table[key] = value.coeffs
    return Cochain(spaces, f.target, table, f"{f.name}o{i}{g.name}")


def _single_space(c: Cochain):
    space = c.target
    if any(s is not space for s in c.arg_spaces):
        raise SpaceMismatchError(f"{c.name} is not an endo-cochain of a single space")
    return space


def insertion(f: Cochain, g: Cochain, keys: Optional[Sequence[Key]] = None) -> Cochain:
    """f o g = sum_i (-1)^((i-1)(n-1)) f o_i g."""
    space = _single_space(f)
    m, n = f.arity, g.arity
    if m + n - 1 < 0:
        raise CochainError("composition of two 0-cochains is undefined")
    total = Cochain.zero((space,) * (m + n - 1), space)
    for i in range(1, m + 1):
        term = compose_at(f, g, i, keys)
        sign = -1 if ((i - 1) * (n - 1)) % 2 else 1
        total = total + (term if sign > 0 else -term)
    return total


def gerstenhaber(f: Cochain, g: Cochain, keys: Optional[Sequence[Key]] = None) -> Cochain:
    """
    [f, g]_G = f o g - (-1)^((m-1)(n-1)) g o f on a single space.

    Args:
        f, g: Cochains with every argument and value in the same space
        keys: Optional subset of basis tuples to compute

    Returns:
        Cochain of arity m + n - 1
    """
    if _single_space(f) is not _single_space(g):
        raise SpaceMismatchError(f"{f.name} and {g.name} live on different spaces")
    if keys is not None:
        keys = list(keys)
    m, n = f.arity, g.arity
    forward = insertion(f, g, keys)
    backward = insertion(g, f, keys)
    if ((m - 1) * (n - 1)) % 2:
        result = forward + backward
    else:
        result = forward - backward
    logger.debug("gerstenhaber bracket of arities %d, %d: %d entries", m, n, len(result.table))
    return result.renamed(f"[{f.name},{g.name}]")
