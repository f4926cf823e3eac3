"""Conversion between bundle models and engine objects."""

import logging
from typing import Dict, List, Optional, Sequence

from conformal import (
    ConformalAlgebra,
    ConformalBimodule,
    LambdaExpr,
    Table,
    regular_bimodule,
)
from conformal.errors import SpaceMismatchError
from exactpoly import MPoly, format_mpoly, parse_mpoly
from hochschild import Cochain
from linf import UCochain
from trb import TRBOperator

from .models import AlgebraSpec, BimoduleSpec, Bundle, CochainSpec, Entry, OperatorSpec

logger = logging.getLogger(__name__)


def _vector(values: Sequence[str], rank: int, nvars: int, where: str) -> tuple:
    if len(values) != rank:
        raise SpaceMismatchError(f"{where}: {len(values)} coefficients for rank {rank}")
    return tuple(parse_mpoly(text, nvars) for text in values)


def _table(entries: Sequence[Entry], ranks: Sequence[int], target_rank: int, nvars: int, where: str) -> Table:
    table: Table = {}
    for entry in entries:
        if len(entry.args) != len(ranks):
            raise SpaceMismatchError(f"{where}: entry {entry.args} needs {len(ranks)} indices")
        key = tuple(i - 1 for i in entry.args)
        for k, rank in zip(key, ranks):
            if k >= rank:
                raise SpaceMismatchError(f"{where}: index {k + 1} exceeds rank {rank}")
        if key in table:
            raise SpaceMismatchError(f"{where}: entry {entry.args} given twice")
        table[key] = _vector(entry.value, target_rank, nvars, where)
    return table


def decode_algebra(spec: AlgebraSpec) -> ConformalAlgebra:
    rank = len(spec.basis)
    product = _table(spec.product, [rank, rank], rank, 1, f"algebra {spec.name}")
    return ConformalAlgebra(rank, product, spec.basis, spec.name)


def decode_bimodule(spec: BimoduleSpec, T: ConformalAlgebra) -> ConformalBimodule:
    if spec.regular:
        names = spec.basis or [f"u{i + 1}" for i in range(T.rank)]
        if len(names) != T.rank:
            raise SpaceMismatchError(f"regular bimodule {spec.name} needs {T.rank} basis names")
        return regular_bimodule(T, names, spec.name)
    rank = len(spec.basis)
    left = _table(spec.left, [T.rank, rank], rank, 1, f"left action on {spec.name}")
    right = _table(spec.right, [rank, T.rank], rank, 1, f"right action on {spec.name}")
    return ConformalBimodule(T, rank, left, right, spec.basis, spec.name)


def decode_cochain(spec: CochainSpec, U: ConformalBimodule, name: str) -> Cochain:
    T = U.over
    nvars = max(spec.arity - 1, 0)
    label = spec.name or name
    if spec.on == "U":
        table = _table(spec.entries, [U.rank] * spec.arity, T.rank, nvars, f"cochain {label}")
        return UCochain(U, T, spec.arity, table, label)
    table = _table(spec.entries, [T.rank] * spec.arity, U.rank, nvars, f"cochain {label}")
    return Cochain([T] * spec.arity, U, table, label)


def decode_matrix(rows: List[List[str]], U: ConformalBimodule, name: str) -> TRBOperator:
    T = U.over
    if len(rows) != T.rank or any(len(row) != U.rank for row in rows):
        raise SpaceMismatchError(f"operator {name} must be a {T.rank} x {U.rank} matrix")
    return TRBOperator(U, [[parse_mpoly(text, 0) for text in row] for row in rows], name)


def decode_operator(spec: OperatorSpec, U: ConformalBimodule, name: str) -> TRBOperator:
    return decode_matrix(spec.matrix, U, name)


def decode_element(values: Sequence[str], space, name: str) -> LambdaExpr:
    return LambdaExpr(space, 0, _vector(values, space.rank, 0, f"element {name}"))


def _entries(table: Table) -> List[Entry]:
    return [
        Entry(args=[k + 1 for k in key], value=[format_mpoly(c) for c in table[key]])
        for key in sorted(table)
    ]


def encode_algebra(T: ConformalAlgebra) -> AlgebraSpec:
    return AlgebraSpec(name=T.name, basis=list(T.basis_names), product=_entries(T.product))


def encode_bimodule(U: ConformalBimodule) -> BimoduleSpec:
    return BimoduleSpec(
        name=U.name,
        basis=list(U.basis_names),
        left=_entries(U.left),
        right=_entries(U.right),
    )


def encode_cochain(c: Cochain) -> CochainSpec:
    on = "T" if isinstance(c.target, ConformalBimodule) else "U"
    return CochainSpec(name=c.name, arity=c.arity, on=on, entries=_entries(c.table))


def encode_operator(R) -> OperatorSpec:
    return OperatorSpec(matrix=[[format_mpoly(entry) for entry in row] for row in R.matrix])


def encode_element(x: LambdaExpr) -> List[str]:
    return [format_mpoly(c) for c in x.coeffs]


def encode_value(c: Cochain) -> Dict[str, str]:
    """Human-readable table of a cochain, keyed by basis names."""
    return {",".join(c.arg_names(key)) or "()": c.entry(key).to_text() for key in sorted(c.table)}


def with_values(
    bundle: Bundle,
    operators: Optional[Dict[str, TRBOperator]] = None,
    cochains: Optional[Dict[str, Cochain]] = None,
    elements: Optional[Dict[str, LambdaExpr]] = None,
    cocycle: Optional[Cochain] = None,
) -> Bundle:
    """A copy of ``bundle`` with computed values added under the given names."""
    updated = bundle.model_copy(deep=True)
    for name, R in (operators or {}).items():
        updated.operators[name] = encode_operator(R)
    for name, c in (cochains or {}).items():
        updated.cochains[name] = encode_cochain(c.renamed(name))
    for name, x in (elements or {}).items():
        updated.elements[name] = encode_element(x)
    if cocycle is not None:
        updated.cocycle = encode_cochain(cocycle)
    return updated
