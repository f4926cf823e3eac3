"""The deformation equations of a formal series R_t = sum t^i R_i, order by order."""

import logging

from conformal import ReportGroup
from hochschild import Cochain

from .linear import GENERAL_ANCHOR, order_identity
from .series import DeformationSeries

logger = logging.getLogger(__name__)


def check_formal_deformation(series: DeformationSeries, H: Cochain, up_to: int) -> ReportGroup:
    """
    Check the coefficient of t^n for n = 0..up_to.

    Order 0 is the twisted Rota-Baxter identity for R_0 and order 1 says
    that R_1 is a 1-cocycle.

    Returns:
        ReportGroup with one part ``order n`` per order
    """
    if up_to < 0:
        raise ValueError("order must be nonnegative")
    group = ReportGroup(f"formal deformation of {series.base.name}")
    for n in range(up_to + 1):
        group.add(order_identity(series.coefficients, H, n, f"order {n}", GENERAL_ANCHOR))
    failed = [p.name for p in group.parts if not p.passed]
    if failed:
        logger.warning("deformation equations fail at %s", ", ".join(failed))
    return group
