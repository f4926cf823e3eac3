"""Tests for coboundary twists and graph perturbations."""

import numpy as np
import pytest

from conformal import check_associativity, check_bimodule, regular_bimodule
from conformal.random_instances import random_algebra, random_invertible_matrix
from exactpoly import MPoly, rat
from hochschild import Cochain, hochschild_delta
from trb import (
    NotCocycleError,
    NotInvertibleError,
    check_induced_iso,
    check_trb,
    from_invertible_onecochain,
    induced_bimodule,
    induced_iso_check,
    induced_product,
    perturb_graph,
    twist_by_coboundary,
)


def _one_cochain(fix, images, name="h"):
    """h: T -> U with h(e_i) = images[i] given as constant coefficient lists."""
    table = {(i,): tuple(MPoly.const(c) for c in image) for i, image in enumerate(images)}
    return Cochain((fix.T,), fix.U, table, name)


class TestCoboundaryTwist:
    """H' = H + dh with (p, u) -> (p, u + h(p)) as an isomorphism."""

    def test_dual_numbers(self, fix_a):
        h = _one_cochain(fix_a, [[0, 0], [1, 0]])
        twisted, report = twist_by_coboundary(fix_a.H, h)
        assert report.passed
        assert twisted == fix_a.H + hochschild_delta(h)
        assert twisted.name == "H+dh"

    def test_unit_algebra(self, fix_b):
        h = _one_cochain(fix_b, [[3]])
        _, report = twist_by_coboundary(fix_b.H, h)
        assert report.passed


class TestPerturbGraph:
    """New operators whose graphs are images of Gr(R)."""

    def test_xi_mode_with_cocycle(self, fix_a):
        h = _one_cochain(fix_a, [[0, 0], [0, 1]])
        result = perturb_graph(fix_a.R, fix_a.H, h, "xi")
        assert result.report.passed
        assert result.operator.matrix == fix_a.R.matrix
        assert result.cocycle is fix_a.H
        assert check_induced_iso(fix_a.R, result.operator, h, fix_a.H).passed
        assert induced_iso_check(fix_a.R, fix_a.H, h).passed

    def test_xi_mode_needs_cocycle(self, fix_a):
        h = _one_cochain(fix_a, [[1, 0], [0, 0]])
        with pytest.raises(NotCocycleError) as info:
            perturb_graph(fix_a.R, fix_a.H, h, "xi")
        assert info.value.witness == ("e1", "e1")

    def test_phi_mode(self, fix_a):
        h = _one_cochain(fix_a, [[0, 0], [-1, 0]])
        result = perturb_graph(fix_a.R, fix_a.H, h, "phi")
        assert result.report.passed
        assert result.operator.matrix[1][0] == MPoly.const(rat(1, 2))
        assert result.operator.matrix[0][0].is_zero
        assert result.cocycle == fix_a.H + hochschild_delta(h)
        assert check_trb(result.operator, result.cocycle).passed

    def test_phi_mode_singular(self, fix_a):
        h = _one_cochain(fix_a, [[0, 0], [1, 0]])
        with pytest.raises(NotInvertibleError):
            perturb_graph(fix_a.R, fix_a.H, h, "phi")

    def test_unknown_mode(self, fix_a):
        h = _one_cochain(fix_a, [[0, 0], [0, 0]])
        with pytest.raises(ValueError):
            perturb_graph(fix_a.R, fix_a.H, h, "psi")


class TestInvertibleOneCochain:
    """R = h^(-1) is twisted Rota-Baxter for H = -dh."""

    def test_unit_algebra_gives_back_the_twisted_identity(self, fix_b):
        h = _one_cochain(fix_b, [[1]])
        R, H = from_invertible_onecochain(h)
        assert R.matrix == fix_b.R.matrix
        assert H == fix_b.H
        assert check_trb(R, H).passed

    def test_scaled_identity(self, fix_a):
        h = _one_cochain(fix_a, [[2, 0], [0, 2]])
        R, H = from_invertible_onecochain(h)
        assert R.matrix[0][0] == MPoly.const(rat(1, 2))
        assert check_trb(R, H).passed

    def test_not_invertible(self, fix_b):
        h = Cochain((fix_b.T,), fix_b.U, {(0,): (MPoly.D(),)}, "h")
        with pytest.raises(NotInvertibleError):
            from_invertible_onecochain(h)

    def test_random_inverses_induce_algebras_and_bimodules(self):
        rng = np.random.default_rng(163)
        for _ in range(20):
            T = random_algebra(rng)
            U = regular_bimodule(T)
            matrix = random_invertible_matrix(rng, T.rank)
            table = {(a,): tuple(matrix[i][a] for i in range(U.rank)) for a in range(T.rank)}
            R, H = from_invertible_onecochain(Cochain((T,), U, table, "h"))
            assert check_trb(R, H).passed
            product = induced_product(R, H)
            assert check_associativity(product).passed
            assert check_bimodule(product, induced_bimodule(R, H, product)).passed
