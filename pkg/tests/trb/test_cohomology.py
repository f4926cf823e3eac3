"""Tests for the twisted coboundary and truncated cohomology."""

from types import SimpleNamespace

import numpy as np
import pytest

from conformal import LambdaExpr, regular_bimodule, zero_bimodule
from conformal.library import dual_numbers, matrix_algebra
from conformal.random_instances import random_table
from exactpoly import MPoly
from hochschild import Cochain
from linf import UCochain, d_R
from trb import (
    NotTRBError,
    TRBOperator,
    cocycle_basis,
    cohomology,
    growth_bound,
    matrix_from_rows,
    solve_coboundary,
    twisted_delta,
)


@pytest.fixture
def matrix_identity():
    """R = id on 2x2 matrices, twisted by H(p, q) = -pq."""
    T = matrix_algebra()
    U = regular_bimodule(T)
    H = Cochain((T, T), U, {key: tuple(-c for c in vector) for key, vector in T.product.items()}, "H")
    R = TRBOperator(U, [[MPoly.one() if i == j else MPoly.zero() for j in range(4)] for i in range(4)], "R")
    return SimpleNamespace(T=T, U=U, R=R, H=H)


@pytest.fixture
def rank_zero():
    """The dual numbers over a rank-0 module with R = 0 and H = 0."""
    T = dual_numbers()
    U = zero_bimodule(T, 0)
    return SimpleNamespace(T=T, U=U, R=TRBOperator.zero_on(U), H=Cochain.zero((T, T), U, "H"))


class TestTwistedDelta:
    """The seven-term coboundary on cochains U^m -> T."""

    def test_squares_to_zero_on_unit_algebra(self, fix_b):
        g = UCochain(fix_b.U, fix_b.T, 1, {(0,): (MPoly.D() + 2,)}, "g")
        assert twisted_delta(twisted_delta(g, fix_b.R, fix_b.H), fix_b.R, fix_b.H).is_zero

    @pytest.mark.parametrize("fixture", ["fix_a", "fix_b"])
    @pytest.mark.parametrize("arity", [0, 1, 2])
    def test_squares_to_zero_on_random_cochains(self, fixture, arity, request):
        fix = request.getfixturevalue(fixture)
        rng = np.random.default_rng(59 + arity)
        for _ in range(3):
            table = random_table(rng, [fix.U.rank] * arity, fix.T.rank, max_degree=1)
            g = UCochain(fix.U, fix.T, arity, table, "g")
            assert twisted_delta(twisted_delta(g, fix.R, fix.H), fix.R, fix.H).is_zero

    def test_derivation_is_a_cocycle(self, fix_b):
        g = UCochain(fix_b.U, fix_b.T, 1, {(0,): (MPoly.D(),)}, "g")
        assert twisted_delta(g, fix_b.R, fix_b.H).is_zero

    def test_constant_is_not(self, fix_b):
        g = UCochain(fix_b.U, fix_b.T, 1, {(0,): (MPoly.one(),)}, "g")
        assert not twisted_delta(g, fix_b.R, fix_b.H).is_zero

    def test_rejects_non_trb(self, fix_a):
        bad = TRBOperator(fix_a.U, matrix_from_rows([[1, 0], [0, 0]]))
        with pytest.raises(NotTRBError):
            twisted_delta(UCochain.zero_on(fix_a.U, 1), bad, fix_a.H)


class TestCohomology:
    """Truncated dimensions of Z^n, B^n and H^n."""

    def test_unit_algebra_first_cocycles(self, fix_b):
        assert cohomology(fix_b.R, fix_b.H, 1, 0).dim_cocycles == 0
        report = cohomology(fix_b.R, fix_b.H, 1, 1)
        assert report.dim_cocycles == 1
        assert report.route == "twisted"

    def test_dual_numbers_zeroth_degree(self, fix_a):
        report = cohomology(fix_a.R, fix_a.H, 0, 2)
        assert report.dim_cocycles == 6
        assert report.dim_coboundaries_in_window == 0
        assert report.dim_quotient == 6
        assert not report.stabilized
        assert cohomology(fix_a.R, fix_a.H, 0, 3).dim_cocycles == 8

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_routes_agree(self, fix_b, n):
        twisted = cohomology(fix_b.R, fix_b.H, n, 1, route="twisted")
        linf = cohomology(fix_b.R, fix_b.H, n, 1, route="linf")
        assert (twisted.dim_cocycles, twisted.dim_coboundaries_in_window) == (
            linf.dim_cocycles,
            linf.dim_coboundaries_in_window,
        )

    @pytest.mark.parametrize("n", [0, 1, 2])
    @pytest.mark.parametrize("d", [0, 1, 2])
    def test_routes_agree_on_dual_numbers(self, fix_a, n, d):
        twisted = cohomology(fix_a.R, fix_a.H, n, d, route="twisted")
        linf = cohomology(fix_a.R, fix_a.H, n, d, route="linf")
        assert (twisted.dim_cocycles, twisted.dim_coboundaries_in_window, twisted.stabilized) == (
            linf.dim_cocycles,
            linf.dim_coboundaries_in_window,
            linf.stabilized,
        )

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_rank_zero_module_has_no_cohomology(self, rank_zero, n):
        report = cohomology(rank_zero.R, rank_zero.H, n, 1)
        assert (report.dim_cocycles, report.dim_coboundaries_in_window, report.dim_quotient) == (0, 0, 0)
        assert report.stabilized
        assert cocycle_basis(rank_zero.R, rank_zero.H, n, 1) == []

    def test_threads_do_not_change_the_answer(self, fix_a):
        single = cohomology(fix_a.R, fix_a.H, 1, 1, threads=1)
        pooled = cohomology(fix_a.R, fix_a.H, 1, 1, threads=4)
        assert single.to_dict() == pooled.to_dict()

    def test_report_dict(self, fix_b):
        data = cohomology(fix_b.R, fix_b.H, 1, 1).to_dict()
        assert data["degree"] == 1
        assert data["truncation"] == 1
        assert data["growth"] == growth_bound(fix_b.R, fix_b.H)

    def test_invalid_arguments(self, fix_b):
        with pytest.raises(ValueError):
            cohomology(fix_b.R, fix_b.H, 1, -1)
        with pytest.raises(ValueError):
            cohomology(fix_b.R, fix_b.H, 1, 0, route="other")

    def test_rejects_non_trb(self, fix_a):
        bad = TRBOperator(fix_a.U, matrix_from_rows([[1, 0], [0, 0]]))
        with pytest.raises(NotTRBError):
            cohomology(bad, fix_a.H, 1, 0)


class TestCocycleBasis:
    """Exact kernel vectors and coboundary preimages."""

    def test_basis_matches_dimension(self, fix_b):
        basis = cocycle_basis(fix_b.R, fix_b.H, 1, 2)
        assert len(basis) == cohomology(fix_b.R, fix_b.H, 1, 2).dim_cocycles
        for z in basis:
            assert d_R(z, fix_b.R.as_cochain(), fix_b.H).is_zero

    def test_solve_recovers_a_commutator(self, matrix_identity):
        fix = matrix_identity
        R = fix.R.as_cochain()
        p = UCochain(fix.U, fix.T, 0, {(): (MPoly.zero(), MPoly.one(), MPoly.zero(), MPoly.zero())}, "p")
        z = d_R(p, R, fix.H)
        assert not z.is_zero
        assert d_R(z, R, fix.H).is_zero
        solution = solve_coboundary(fix.R, fix.H, z, 0)
        assert solution is not None
        assert d_R(solution, R, fix.H) == z

    def test_derivative_is_not_a_coboundary(self, fix_b):
        z = UCochain(fix_b.U, fix_b.T, 1, {(0,): (MPoly.D(),)}, "z")
        assert solve_coboundary(fix_b.R, fix_b.H, z, 1) is None

    def test_zero_target_is_solved_by_zero(self, fix_b):
        z = UCochain.zero_on(fix_b.U, 1)
        solution = solve_coboundary(fix_b.R, fix_b.H, z, 1)
        assert solution is not None
        assert solution.element() == LambdaExpr.zero(fix_b.T)
