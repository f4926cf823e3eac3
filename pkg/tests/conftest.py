import sys
from pathlib import Path
from types import SimpleNamespace

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from conformal import regular_bimodule  # noqa: E402
from conformal.library import dual_numbers, matrix_algebra, unit_algebra  # noqa: E402
from exactpoly import MPoly  # noqa: E402
from hochschild import Cochain  # noqa: E402
from trb import TRBOperator, matrix_from_rows  # noqa: E402


@pytest.fixture
def data_dir():
    """Bundled example workspaces."""
    return project_root / "src" / "ccalg" / "data"


@pytest.fixture
def fix_a():
    """Dual numbers e1 = 1, e2 = x acting on themselves; R(u1) = e2, R(u2) = 0, H = 0."""
    T = dual_numbers()
    U = regular_bimodule(T, ["u1", "u2"])
    R = TRBOperator(U, matrix_from_rows([[0, 0], [1, 0]]), "R")
    H = Cochain.zero((T, T), U, "H")
    return SimpleNamespace(T=T, U=U, R=R, H=H)


@pytest.fixture
def fix_b():
    """Unit algebra e, regular U with basis u, R = id and H(e, e) = -u."""
    T = unit_algebra()
    U = regular_bimodule(T, ["u"])
    R = TRBOperator(U, matrix_from_rows([[1]]), "R")
    H = Cochain((T, T), U, {(0, 0): (MPoly.const(-1, 1),)}, "H")
    return SimpleNamespace(T=T, U=U, R=R, H=H)


@pytest.fixture
def fix_c():
    """2x2 matrices acting on themselves with R = 0 and H = 0."""
    T = matrix_algebra()
    U = regular_bimodule(T, ["F11", "F12", "F21", "F22"])
    R = TRBOperator.zero_on(U, "R")
    H = Cochain.zero((T, T), U, "H")
    return SimpleNamespace(T=T, U=U, R=R, H=H)
