"""Tests for bundle model <-> engine object conversion."""

import pytest
from pydantic import ValidationError

from ccalg.codec import (
    decode_algebra,
    decode_bimodule,
    decode_cochain,
    decode_element,
    decode_matrix,
    encode_algebra,
    encode_bimodule,
    encode_cochain,
    encode_operator,
    encode_value,
    with_values,
)
from ccalg.models import AlgebraSpec, BimoduleSpec, Bundle, CochainSpec, Entry, SeriesTerm
from conformal.errors import SpaceMismatchError
from exactpoly import MPoly
from hochschild import Cochain
from linf import UCochain


@pytest.fixture
def dual_spec():
    return AlgebraSpec(
        basis=["e1", "e2"],
        product=[
            Entry(args=[1, 1], value=["1", "0"]),
            Entry(args=[1, 2], value=["0", "1"]),
            Entry(args=[2, 1], value=["0", "1"]),
        ],
    )


class TestDecode:
    """Specs to engine objects."""

    def test_algebra(self, dual_spec, fix_a):
        T = decode_algebra(dual_spec)
        assert T.product == fix_a.T.product
        assert T.basis_names == ["e1", "e2"]

    def test_polynomial_coefficients(self):
        T = decode_algebra(AlgebraSpec(basis=["e"], product=[Entry(args=[1, 1], value=["2*D + L1"])]))
        assert T.product[(0, 0)] == (MPoly.D(1) * 2 + MPoly.L(1, 1),)

    def test_vector_length(self):
        spec = AlgebraSpec(basis=["e"], product=[Entry(args=[1, 1], value=["1", "0"])])
        with pytest.raises(SpaceMismatchError, match="2 coefficients for rank 1"):
            decode_algebra(spec)

    def test_index_out_of_range(self):
        spec = AlgebraSpec(basis=["e"], product=[Entry(args=[1, 2], value=["1"])])
        with pytest.raises(SpaceMismatchError, match="exceeds rank"):
            decode_algebra(spec)

    def test_duplicate_entry(self):
        entry = Entry(args=[1, 1], value=["1"])
        with pytest.raises(SpaceMismatchError, match="twice"):
            decode_algebra(AlgebraSpec(basis=["e"], product=[entry, entry]))

    def test_regular_bimodule_names(self, fix_a):
        U = decode_bimodule(BimoduleSpec(regular=True), fix_a.T)
        assert U.basis_names == ["u1", "u2"]
        with pytest.raises(SpaceMismatchError):
            decode_bimodule(BimoduleSpec(regular=True, basis=["u"]), fix_a.T)

    def test_cochain_sides(self, fix_a):
        g = decode_cochain(CochainSpec(arity=1, entries=[Entry(args=[1], value=["D", "1"])]), fix_a.U, "g")
        assert isinstance(g, UCochain)
        assert g.name == "g"
        h = decode_cochain(CochainSpec(arity=1, on="T", entries=[Entry(args=[2], value=["0", "1"])]), fix_a.U, "h")
        assert not isinstance(h, UCochain)
        assert h.entry((1,)).to_text() == "u2"

    def test_matrix_shape(self, fix_a):
        with pytest.raises(SpaceMismatchError, match="2 x 2"):
            decode_matrix([["1", "0"]], fix_a.U, "R")
        R = decode_matrix([["0", "0"], ["1", "0"]], fix_a.U, "R")
        assert R.matrix == fix_a.R.matrix

    def test_element_is_constant(self, fix_a):
        x = decode_element(["0", "D"], fix_a.T, "x")
        assert x.coeffs[1] == MPoly.D()


class TestModels:
    """Schema-level constraints."""

    def test_non_regular_bimodule_needs_basis(self):
        with pytest.raises(ValidationError):
            BimoduleSpec()

    def test_regular_bimodule_has_no_actions(self):
        with pytest.raises(ValidationError):
            BimoduleSpec(regular=True, left=[Entry(args=[1, 1], value=["1"])])

    def test_series_term_source(self):
        with pytest.raises(ValidationError):
            SeriesTerm(power=0)
        with pytest.raises(ValidationError):
            SeriesTerm(power=0, operator="R", matrix=[["1"]])

    def test_negative_arity(self):
        with pytest.raises(ValidationError):
            CochainSpec(arity=-1)


class TestEncode:
    """Engine objects back to specs."""

    def test_algebra_reloads(self, fix_c):
        spec = encode_algebra(fix_c.T)
        assert decode_algebra(spec).product == fix_c.T.product
        assert spec.basis == fix_c.T.basis_names

    def test_bimodule_reloads(self, fix_a):
        spec = encode_bimodule(fix_a.U)
        assert not spec.regular
        U = decode_bimodule(spec, fix_a.T)
        assert U.left == fix_a.U.left
        assert U.right == fix_a.U.right

    def test_operator_text(self, fix_a):
        assert encode_operator(fix_a.R).matrix == [["0", "0"], ["1", "0"]]

    def test_cochain_side(self, fix_b):
        spec = encode_cochain(fix_b.H)
        assert spec.on == "T"
        assert spec.arity == 2
        assert spec.entries[0].value == ["-1"]

    def test_value_table(self, fix_b):
        assert encode_value(fix_b.H) == {"e,e": "-u"}

    def test_with_values_copies(self, fix_b):
        bundle = Bundle(
            algebra=encode_algebra(fix_b.T),
            bimodule=BimoduleSpec(basis=["u"], regular=True),
        )
        h = Cochain((fix_b.T,), fix_b.U, {(0,): (MPoly.const(3),)}, "h")
        updated = with_values(bundle, operators={"R": fix_b.R}, cochains={"k": h}, cocycle=fix_b.H)
        assert bundle.operators == {}
        assert bundle.cocycle is None
        assert updated.operators["R"].matrix == [["1"]]
        assert updated.cochains["k"].name == "k"
        assert updated.cochains["k"].on == "T"
        assert updated.cocycle.entries[0].value == ["-1"]
