"""H-twisted Rota-Baxter operators: checks, induced structures, cohomology, perturbations."""

from .errors import NotCocycleError, NotInvertibleError, NotTRBError
from .operator import (
    TRBOperator,
    determinant,
    inverse,
    invert_one_plus,
    is_nilpotent,
    matrix_from_rows,
    unipotent_inverse,
)
from .checks import GRAPH_ANCHOR, TRB_ANCHOR, check_trb, graph_check, star_product
from .induced import induced_bimodule, induced_product, l_R, r_R, require_trb
from .twisted import TWISTED_ANCHOR, twisted_delta
from .cohomology import (
    CohomologyReport,
    cochain_basis,
    cocycle_basis,
    cohomology,
    coordinates,
    from_coordinates,
    growth_bound,
    solve_coboundary,
)
from .perturbation import (
    Perturbation,
    check_induced_iso,
    from_invertible_onecochain,
    induced_iso_check,
    perturb_graph,
    twist_by_coboundary,
)

__all__ = [
    "NotCocycleError",
    "NotInvertibleError",
    "NotTRBError",
    "TRBOperator",
    "determinant",
    "inverse",
    "invert_one_plus",
    "is_nilpotent",
    "matrix_from_rows",
    "unipotent_inverse",
    "GRAPH_ANCHOR",
    "TRB_ANCHOR",
    "check_trb",
    "graph_check",
    "star_product",
    "induced_bimodule",
    "induced_product",
    "l_R",
    "r_R",
    "require_trb",
    "TWISTED_ANCHOR",
    "twisted_delta",
    "CohomologyReport",
    "cochain_basis",
    "cocycle_basis",
    "cohomology",
    "coordinates",
    "from_coordinates",
    "growth_bound",
    "solve_coboundary",
    "Perturbation",
    "check_induced_iso",
    "from_invertible_onecochain",
    "induced_iso_check",
    "perturb_graph",
    "twist_by_coboundary",
]
