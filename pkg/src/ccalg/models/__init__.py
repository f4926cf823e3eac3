"""Pydantic models for bundle files and command reports."""

from .schemas import (
    AlgebraSpec,
    BimoduleSpec,
    Bundle,
    CheckModel,
    CochainSpec,
    CommandReport,
    Entry,
    OperatorSpec,
    Options,
    SeriesSpec,
    SeriesTerm,
    WitnessModel,
)

__all__ = [
    "AlgebraSpec",
    "BimoduleSpec",
    "Bundle",
    "CheckModel",
    "CochainSpec",
    "CommandReport",
    "Entry",
    "OperatorSpec",
    "Options",
    "SeriesSpec",
    "SeriesTerm",
    "WitnessModel",
]
