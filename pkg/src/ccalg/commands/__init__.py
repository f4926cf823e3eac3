"""Command implementations; each returns a status dictionary."""

from .brackets import bracket_command, d_r_command, mc_residual_command
from .deformation import (
    deform_equiv_command,
    deform_formal_command,
    deform_linear_command,
    nijenhuis_command,
    rigidity_command,
)
from .operators import check_trb_command, cohomology_command, graph_check_command, twisted_delta_command
from .perturbation import from_inverse_command, perturb_command, twist_coboundary_command
from .structure import induce_command, validate_command

__all__ = [
    "bracket_command",
    "d_r_command",
    "mc_residual_command",
    "deform_equiv_command",
    "deform_formal_command",
    "deform_linear_command",
    "nijenhuis_command",
    "rigidity_command",
    "check_trb_command",
    "cohomology_command",
    "graph_check_command",
    "twisted_delta_command",
    "from_inverse_command",
    "perturb_command",
    "twist_coboundary_command",
    "induce_command",
    "validate_command",
]
