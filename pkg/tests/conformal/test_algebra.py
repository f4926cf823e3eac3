"""Tests for conformal algebras, bimodules and their axiom checks."""

import numpy as np
import pytest

from conformal import (
    ConformalAlgebra,
    LambdaExpr,
    ModuleMap,
    NotAssociativeError,
    SpaceMismatchError,
    check_algebra_morphism,
    check_associativity,
    check_bimodule,
    current_algebra,
    element,
    lambda_product,
    regular_bimodule,
    semidirect_twisted,
    zero_bimodule,
)
from conformal.library import dual_numbers, matrix_algebra, split_algebra, unit_algebra, upper_triangular
from conformal.random_instances import random_element, random_pair, random_table
from exactpoly import MPoly, rat
from hochschild import Cochain, hochschild_delta, is_two_cocycle


@pytest.fixture
def derivation_square():
    """Rank one with e_L e = D e, which is not associative."""
    return ConformalAlgebra(1, {(0, 0): (MPoly.D(1),)}, ["e"], name="Q")


class TestCurrentAlgebras:
    """Current algebras of finite-dimensional associative algebras."""

    @pytest.mark.parametrize("build", [unit_algebra, dual_numbers, split_algebra, matrix_algebra, upper_triangular])
    def test_library_is_associative(self, build):
        T = build()
        report = check_associativity(T)
        assert report.passed
        assert report.checked == T.rank ** 3
        assert T.validated

    def test_non_associative_constants_rejected(self):
        c = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        c[0][0][0] = 1
        c[0][1][0] = 1
        with pytest.raises(NotAssociativeError):
            current_algebra(c)

    def test_constants_must_be_cubic(self):
        with pytest.raises(SpaceMismatchError):
            current_algebra([[[1, 0]]])

    def test_rational_strings(self):
        T = current_algebra([[["1/2"]]], ["e"])
        assert T.structure_constant(0, 0, 0) == MPoly.const(rat(1, 2), 1)
        assert check_associativity(T).passed


class TestAssociativityFailure:
    """A lambda-dependent product that breaks associativity."""

    def test_witness_triple(self, derivation_square):
        report = check_associativity(derivation_square)
        assert not report.passed
        assert report.first_witness.args == ("e", "e", "e")
        assert not derivation_square.validated


class TestSesquilinearity:
    """(D a)_L b = -L a_L b and a_L (D b) = (D + L) a_L b."""

    def test_left_argument(self):
        T = dual_numbers()
        a = element(T, [MPoly.D(), 0]).embed(1)
        b = LambdaExpr.basis(T, 1, 1)
        value = lambda_product(T, a, b, 1)
        assert value.coeffs == (MPoly.zero(1), -MPoly.L(1, 1))

    def test_right_argument(self):
        T = dual_numbers()
        a = LambdaExpr.basis(T, 0, 1)
        b = element(T, [0, MPoly.D()]).embed(1)
        value = lambda_product(T, a, b, 1)
        assert value.coeffs == (MPoly.zero(1), MPoly.D(1) + MPoly.L(1, 1))

    def test_random_elements_associate(self):
        rng = np.random.default_rng(11)
        lam, mu = MPoly.L(1, 2), MPoly.L(2, 2)
        for _ in range(8):
            T, _ = random_pair(rng)
            a, b, c = (random_element(rng, T, 2).embed(2) for _ in range(3))
            lhs = T.multiply(T.multiply(a, b, lam), c, lam + mu)
            rhs = T.multiply(a, T.multiply(b, c, mu), lam)
            assert lhs == rhs


class TestBimodules:
    """Bimodule axioms and the twisted semidirect product."""

    def test_regular_bimodule(self):
        T = matrix_algebra()
        assert check_bimodule(T, regular_bimodule(T)).passed

    def test_zero_bimodule(self):
        T = dual_numbers()
        assert check_bimodule(T, zero_bimodule(T, 3)).passed

    def test_bimodule_over_another_algebra(self):
        T = dual_numbers()
        U = regular_bimodule(unit_algebra())
        report = check_bimodule(T, U)
        assert not report.passed

    def test_random_pairs(self):
        rng = np.random.default_rng(3)
        for _ in range(6):
            T, U = random_pair(rng)
            assert check_bimodule(T, U).passed

    def test_semidirect_with_cocycle_is_associative(self, fix_b):
        S = semidirect_twisted(fix_b.T, fix_b.U, fix_b.H)
        assert S.basis_names == ["e", "u"]
        assert S.offset == 1
        assert check_associativity(S).passed

    def test_semidirect_with_non_cocycle_fails(self, fix_a):
        T, U = fix_a.T, fix_a.U
        H = Cochain((T, T), U, {(0, 0): (MPoly.one(1), MPoly.zero(1))}, "H")
        assert not check_associativity(semidirect_twisted(T, U, H)).passed

    def test_semidirect_is_associative_exactly_for_cocycles(self):
        rng = np.random.default_rng(101)
        outcomes = set()
        for trial in range(50):
            T, U = random_pair(rng)
            if trial % 3 == 1:
                h = Cochain((T,), U, random_table(rng, [T.rank], U.rank), "h")
                H = hochschild_delta(h)
            elif trial % 3 == 2:
                H = Cochain.zero((T, T), U, "H")
            else:
                H = Cochain((T, T), U, random_table(rng, [T.rank, T.rank], U.rank), "H")
            associative = check_associativity(semidirect_twisted(T, U, H)).passed
            assert associative == is_two_cocycle(H).passed
            outcomes.add(associative)
        assert outcomes == {True, False}

    def test_semidirect_needs_matching_algebra(self):
        with pytest.raises(SpaceMismatchError):
            semidirect_twisted(dual_numbers(), regular_bimodule(unit_algebra()))


class TestLambdaExpr:
    """Values and their text form."""

    def test_text(self):
        T = dual_numbers()
        assert element(T, [2, 0]).to_text() == "2*e1"
        assert element(T, [1, MPoly.D()]).to_text() == "e1 + (D)*e2"
        assert LambdaExpr.zero(T).to_text() == "0"

    def test_rank_is_checked(self):
        with pytest.raises(SpaceMismatchError):
            LambdaExpr(dual_numbers(), 0, (MPoly.one(),))

    def test_spaces_do_not_mix(self):
        with pytest.raises(SpaceMismatchError):
            element(dual_numbers(), [1, 0]) + element(dual_numbers(), [1, 0])


class TestModuleMaps:
    """C[D]-linear maps and algebra morphisms."""

    def test_identity_is_a_morphism(self):
        T = matrix_algebra()
        assert check_algebra_morphism(T, T, ModuleMap.identity(T)).passed

    def test_doubling_is_not_a_morphism(self):
        T = unit_algebra()
        report = check_algebra_morphism(T, T, ModuleMap.identity(T).scale(2))
        assert not report.passed
        assert report.first_witness.residual == "-2*e"

    def test_compose_and_apply(self):
        T = dual_numbers()
        shift = ModuleMap(T, T, [[MPoly.zero(), MPoly.zero()], [MPoly.D(), MPoly.zero()]])
        assert shift.compose(shift).is_zero
        assert shift.apply(element(T, [1, 0])).coeffs == (MPoly.zero(), MPoly.D())
        assert shift.max_degree() == 1

    def test_entries_are_polynomials_in_D(self):
        T = unit_algebra()
        with pytest.raises(SpaceMismatchError):
            ModuleMap(T, T, [[MPoly.L(1, 1)]])

    def test_shape_is_checked(self):
        T = dual_numbers()
        with pytest.raises(SpaceMismatchError):
            ModuleMap(T, T, [[MPoly.one()]])
