"""
Bundle and report schemas.

A bundle describes one workspace: an algebra T, a bimodule U, a twisting
2-cochain H, named operators U -> T, cochains, elements of T, deformation
series and options.  Basis indices are 1-based; every coefficient is a
polynomial in D (and L1, L2, ... where the arity asks for it) written as
text, e.g. ``"1/2*D*L1 - 1"``.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Entry(_Strict):
    """One table entry: basis indices of the arguments and the value vector."""
    args: List[int] = Field(default_factory=list)
    value: List[str]

    @model_validator(mode="after")
    def _positive_indices(self) -> "Entry":
        if any(i < 1 for i in self.args):
            raise ValueError("basis indices are 1-based")
        return self


class AlgebraSpec(_Strict):
    name: str = "T"
    basis: List[str]
    product: List[Entry] = Field(default_factory=list)


class BimoduleSpec(_Strict):
    """Either ``regular: true`` or explicit left ``(p, u)`` and right ``(u, p)`` actions."""
    name: str = "U"
    basis: Optional[List[str]] = None
    regular: bool = False
    left: List[Entry] = Field(default_factory=list)
    right: List[Entry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _basis_or_regular(self) -> "BimoduleSpec":
        if not self.regular and self.basis is None:
            raise ValueError("a non-regular bimodule needs a basis")
        if self.regular and (self.left or self.right):
            raise ValueError("a regular bimodule takes its actions from the algebra")
        return self


class CochainSpec(_Strict):
    """
    A cochain of the given arity.

    ``on = "U"`` (default) means arguments in U and values in T; ``on = "T"``
    means arguments in T and values in U (the 1-cochains h used for twists
    and perturbations).
    """
    name: Optional[str] = None
    arity: int = Field(ge=0)
    on: Literal["U", "T"] = "U"
    entries: List[Entry] = Field(default_factory=list)


class OperatorSpec(_Strict):
    """rank(T) rows and rank(U) columns: R(u_a) = sum_i matrix[i][a](D) e_i."""
    matrix: List[List[str]]


class SeriesTerm(_Strict):
    power: int = Field(ge=0)
    operator: Optional[str] = None
    matrix: Optional[List[List[str]]] = None

    @model_validator(mode="after")
    def _one_source(self) -> "SeriesTerm":
        if (self.operator is None) == (self.matrix is None):
            raise ValueError("a series term names an operator or gives a matrix, not both")
        return self


class SeriesSpec(_Strict):
    terms: List[SeriesTerm]


class Options(_Strict):
    truncation: Optional[int] = Field(default=None, ge=0)
    format: Optional[Literal["text", "json"]] = None
    threads: Optional[int] = Field(default=None, ge=1)


class Bundle(_Strict):
    algebra: AlgebraSpec
    bimodule: BimoduleSpec
    cocycle: Optional[CochainSpec] = None
    operators: Dict[str, OperatorSpec] = Field(default_factory=dict)
    cochains: Dict[str, CochainSpec] = Field(default_factory=dict)
    elements: Dict[str, List[str]] = Field(default_factory=dict)
    series: Dict[str, SeriesSpec] = Field(default_factory=dict)
    options: Options = Field(default_factory=Options)


class WitnessModel(BaseModel):
    label: str
    args: List[str]
    residual: str


class CheckModel(BaseModel):
    name: str
    anchor: str
    passed: bool
    checked: int = 0
    witnesses: List[WitnessModel] = Field(default_factory=list)


class CommandReport(BaseModel):
    """What ``--format json`` prints; ``bundle`` reloads through the loader."""
    app: str
    version: str
    command: str
    source: str
    status: Literal["pass", "fail"]
    checks: List[CheckModel] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    bundle: Optional[Bundle] = None
