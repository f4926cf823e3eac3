"""
Associative conformal algebras and bimodules over QQ[D] given by structure
constants, with lambda-product evaluation and axiom checks.
"""

from .errors import ConformalError, SpaceMismatchError, NotAssociativeError
from .lambda_calculus import (
    Element,
    LambdaExpr,
    Table,
    Vector,
    apply_table,
    element,
    normalize_table,
    slot_form,
    table_degree,
)
from .algebra import (
    ConformalAlgebra,
    ConformalBimodule,
    SemidirectProduct,
    current_algebra,
    lambda_product,
    left_action,
    regular_bimodule,
    right_action,
    semidirect_twisted,
    zero_bimodule,
)
from .linear_map import ModuleMap
from .reports import CheckReport, ReportGroup, Witness, combine
from .checks import check_algebra_morphism, check_associativity, check_bimodule

__all__ = [
    "ConformalError",
    "SpaceMismatchError",
    "NotAssociativeError",
    "Element",
    "LambdaExpr",
    "Table",
    "Vector",
    "apply_table",
    "element",
    "normalize_table",
    "slot_form",
    "table_degree",
    "ConformalAlgebra",
    "ConformalBimodule",
    "SemidirectProduct",
    "current_algebra",
    "lambda_product",
    "left_action",
    "regular_bimodule",
    "right_action",
    "semidirect_twisted",
    "zero_bimodule",
    "ModuleMap",
    "CheckReport",
    "ReportGroup",
    "Witness",
    "combine",
    "check_algebra_morphism",
    "check_associativity",
    "check_bimodule",
]
