"""Linear and formal deformations of twisted Rota-Baxter operators, equivalences and rigidity."""

from .series import DeformationSeries, MorphismPair
from .linear import (
    COCYCLE_ANCHOR,
    GENERAL_ANCHOR,
    ORDER_ANCHORS,
    check_linear_deformation,
    is_one_cocycle,
    order_identity,
)
from .equivalence import (
    EquivalencePair,
    check_linear_equivalence,
    check_morphism,
    equivalence_pair,
    gauge_first_order,
    order_one_equations,
)
from .nijenhuis import NIJENHUIS_ANCHOR, is_nijenhuis
from .formal import check_formal_deformation
from .rigidity import (
    RIGIDITY_ANCHOR,
    SOLVED_NIJENHUIS,
    SOLVED_NOT_NIJENHUIS,
    UNSOLVED,
    RigidityEntry,
    RigidityReport,
    rigidity_witness,
)

__all__ = [
    "DeformationSeries",
    "MorphismPair",
    "COCYCLE_ANCHOR",
    "GENERAL_ANCHOR",
    "ORDER_ANCHORS",
    "check_linear_deformation",
    "is_one_cocycle",
    "order_identity",
    "EquivalencePair",
    "check_linear_equivalence",
    "check_morphism",
    "equivalence_pair",
    "gauge_first_order",
    "order_one_equations",
    "NIJENHUIS_ANCHOR",
    "is_nijenhuis",
    "check_formal_deformation",
    "RIGIDITY_ANCHOR",
    "SOLVED_NIJENHUIS",
    "SOLVED_NOT_NIJENHUIS",
    "UNSOLVED",
    "RigidityEntry",
    "RigidityReport",
    "rigidity_witness",
]
