"""Tests for morphisms, order-one equivalences, Nijenhuis elements and rigidity witnesses."""

from types import SimpleNamespace

import pytest

from conformal import LambdaExpr, current_algebra, element, regular_bimodule
from conformal.errors import SpaceMismatchError
from conformal.library import matrix_algebra
from deform import (
    SOLVED_NIJENHUIS,
    SOLVED_NOT_NIJENHUIS,
    UNSOLVED,
    MorphismPair,
    check_linear_equivalence,
    check_morphism,
    equivalence_pair,
    gauge_first_order,
    is_nijenhuis,
    rigidity_witness,
)
from exactpoly import MPoly, rat
from hochschild import Cochain
from linf import NotTRBError, UCochain, d_R
from trb import TRBOperator, cohomology, matrix_from_rows


@pytest.fixture
def cocycle(fix_a):
    return TRBOperator(fix_a.U, matrix_from_rows([[1, 0], [0, 0]]), "R1")


@pytest.fixture
def halved_unit(fix_b):
    """T' with e.e = e/2, U' regular, H' = H/2 and R' = id."""
    T = current_algebra([[["1/2"]]], ["e"], name="T'")
    U = regular_bimodule(T, ["u"], name="U'")
    H = Cochain((T, T), U, {(0, 0): (MPoly.const(rat(-1, 2), 1),)}, "H'")
    R = TRBOperator(U, matrix_from_rows([[1]]), "R'")
    return SimpleNamespace(T=T, U=U, R=R, H=H)


@pytest.fixture
def matrix_identity():
    """R = id on 2x2 matrices, twisted by H(p, q) = -pq."""
    T = matrix_algebra()
    U = regular_bimodule(T)
    H = Cochain((T, T), U, {key: tuple(-c for c in vector) for key, vector in T.product.items()}, "H")
    R = TRBOperator(U, matrix_from_rows([[1 if i == j else 0 for j in range(4)] for i in range(4)]), "R")
    return SimpleNamespace(T=T, U=U, R=R, H=H)


class TestMorphisms:
    """(phi, psi) compatible with products, actions, H and R."""

    def test_identity(self, fix_b):
        pair = MorphismPair.identity(fix_b.R)
        assert check_morphism(pair, fix_b.R, fix_b.H, fix_b.R, fix_b.H).passed

    def test_doubling_onto_rescaled_structures(self, fix_b, halved_unit):
        pair = MorphismPair.scaled(fix_b.R, 2, 2, halved_unit.T, halved_unit.U)
        group = check_morphism(pair, fix_b.R, fix_b.H, halved_unit.R, halved_unit.H)
        assert group.passed
        assert [p.name for p in group.parts] == [
            "phi algebra morphism",
            "left action",
            "right action",
            "twisting cocycle",
            "operator",
        ]

    def test_doubling_onto_the_same_structures(self, fix_b):
        pair = MorphismPair.scaled(fix_b.R, 2, 2)
        group = check_morphism(pair, fix_b.R, fix_b.H, fix_b.R, fix_b.H)
        assert not group.passed
        assert not group.part("phi algebra morphism").passed

    def test_target_operator_must_match_codomains(self, fix_b, halved_unit):
        pair = MorphismPair.scaled(fix_b.R, 2, 2, halved_unit.T, halved_unit.U)
        with pytest.raises(SpaceMismatchError):
            check_morphism(pair, fix_b.R, fix_b.H, fix_b.R, fix_b.H)


class TestEquivalencePair:
    """phi1 and psi1 generated by an element p."""

    def test_central_element_acts_trivially(self, fix_a):
        pair = equivalence_pair(element(fix_a.T, [0, 1]), fix_a.R, fix_a.H)
        assert pair.is_identity
        lam = MPoly.L(1, 1)
        assert pair.psi1(LambdaExpr.basis(fix_a.U, 0, 1), lam).is_zero

    def test_matrix_unit(self, fix_c):
        pair = equivalence_pair(element(fix_c.T, [1, 0, 0, 0]), fix_c.R, fix_c.H)
        columns = pair.phi_columns
        assert columns[1].to_text() == "E12"
        assert columns[2].to_text() == "-E21"
        assert not pair.is_identity

    def test_element_must_live_in_the_algebra(self, fix_a):
        with pytest.raises(SpaceMismatchError):
            equivalence_pair(element(fix_a.U, [1, 0]), fix_a.R, fix_a.H)


class TestLinearEquivalence:
    """Order-one equivalences between R + t R1 and R + t R1'."""

    def test_trivial_generator(self, fix_a, cocycle):
        p = element(fix_a.T, [0, 1])
        group = check_linear_equivalence(fix_a.R, cocycle, cocycle, fix_a.H, p)
        assert group.passed
        assert group.parts[-1].name == "coboundary"

    def test_different_directions_fail(self, fix_a, cocycle):
        p = element(fix_a.T, [0, 1])
        zero = TRBOperator.zero_on(fix_a.U, "0")
        group = check_linear_equivalence(fix_a.R, cocycle, zero, fix_a.H, p)
        assert not group.part("operator order one").passed
        assert not group.part("coboundary").passed

    def test_generator_is_closed(self, fix_a):
        p = UCochain(fix_a.U, fix_a.T, 0, {(): (MPoly.zero(), MPoly.one())}, "p")
        assert d_R(p, fix_a.R.as_cochain(), fix_a.H).is_zero

    def test_gauge(self, fix_a, cocycle):
        p = element(fix_a.T, [0, 1])
        zero = TRBOperator.zero_on(fix_a.U, "0")
        assert all(v.is_zero for v in gauge_first_order(fix_a.R, zero, p, fix_a.H))
        values = gauge_first_order(fix_a.R, cocycle, p, fix_a.H)
        assert values[0] == LambdaExpr.basis(fix_a.T, 0, 1)
        assert values[1].is_zero


class TestNijenhuis:
    """Nijenhuis elements of a twisted Rota-Baxter operator."""

    def test_dual_numbers(self, fix_a):
        group = is_nijenhuis(element(fix_a.T, [0, 1]), fix_a.R, fix_a.H)
        assert group.passed
        assert group.parts[0].name == "nijenhuis"

    def test_matrix_unit_fails_commutators(self, fix_c):
        group = is_nijenhuis(element(fix_c.T, [1, 0, 0, 0]), fix_c.R, fix_c.H)
        assert group.part("nijenhuis").passed
        commutators = group.part("commutators")
        assert not commutators.passed
        assert commutators.first_witness.args == ("E12", "E21")
        assert commutators.first_witness.residual == "-E11"
        assert not group.passed

    def test_requires_trb(self, fix_a, cocycle):
        with pytest.raises(NotTRBError):
            is_nijenhuis(element(fix_a.T, [0, 1]), cocycle, fix_a.H)


class TestRigidity:
    """Truncated rigidity witnesses."""

    def test_derivative_cocycle_is_unsolved(self, fix_b):
        report = rigidity_witness(fix_b.R, fix_b.H, 1)
        assert [e.status for e in report.entries] == [UNSOLVED]
        assert not report.witnessed
        assert report.verdict == "rigidity not witnessed at degree 1"
        assert report.to_dict()["entries"][0]["preimage"] is None

    def test_inner_derivations_are_solved(self, matrix_identity):
        fix = matrix_identity
        report = rigidity_witness(fix.R, fix.H, 0, threads=2)
        assert len(report.entries) == 3
        assert all(e.status == SOLVED_NOT_NIJENHUIS for e in report.entries)
        for entry in report.entries:
            assert entry.preimage is not None
            closed = UCochain(fix.U, fix.T, 0, {(): entry.preimage.coeffs}, "p")
            assert d_R(closed, fix.R.as_cochain(), fix.H) == entry.cocycle

    def test_dual_numbers_entries_verify_themselves(self, fix_a):
        report = rigidity_witness(fix_a.R, fix_a.H, 1)
        assert len(report.entries) == cohomology(fix_a.R, fix_a.H, 1, 1).dim_cocycles
        assert report.entries
        R = fix_a.R.as_cochain()
        for entry in report.entries:
            if entry.preimage is None:
                assert entry.status == UNSOLVED
                continue
            closed = UCochain(fix_a.U, fix_a.T, 0, {(): entry.preimage.coeffs}, "p")
            assert d_R(closed, R, fix_a.H) == entry.cocycle
            nijenhuis = is_nijenhuis(entry.preimage, fix_a.R, fix_a.H).passed
            assert entry.status == (SOLVED_NIJENHUIS if nijenhuis else SOLVED_NOT_NIJENHUIS)
        assert report.witnessed == all(e.status == SOLVED_NIJENHUIS for e in report.entries)


    def test_empty_cocycle_space_is_witnessed(self, fix_b):
        report = rigidity_witness(fix_b.R, fix_b.H, 0)
        assert report.entries == []
        assert report.witnessed

    def test_negative_truncation(self, fix_b):
        with pytest.raises(ValueError):
            rigidity_witness(fix_b.R, fix_b.H, -1)
