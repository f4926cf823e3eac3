"""Tests for bundle loading and the workspace."""

import json

import pytest

from ccalg.config.settings import settings
from ccalg.workspace import (
    BundleParseError,
    BundleValidationError,
    Workspace,
    build_workspace,
    load,
    parse_bundle,
)
from linf import UCochain


def _line_containing(text, needle):
    return next(n for n, line in enumerate(text.splitlines(), start=1) if needle in line)


class TestParseBundle:
    """JSON and schema errors carry the file line."""

    def test_json_syntax(self):
        raw = '{\n  "algebra": {\n    "basis": ["e"],\n  }\n}'
        with pytest.raises(BundleParseError) as info:
            parse_bundle(raw, "broken.json")
        assert info.value.line == 4
        assert str(info.value).startswith("broken.json:4:")

    def test_unknown_field(self, unit_bundle):
        unit_bundle["algebra"]["colour"] = "red"
        raw = json.dumps(unit_bundle, indent=2)
        with pytest.raises(BundleParseError) as info:
            parse_bundle(raw)
        assert info.value.line == _line_containing(raw, '"colour"')
        assert "algebra.colour" in str(info.value)

    def test_zero_based_index(self, unit_bundle):
        unit_bundle["algebra"]["product"][0]["args"] = [0, 1]
        with pytest.raises(BundleParseError):
            parse_bundle(json.dumps(unit_bundle))

    def test_report_with_bundle(self, unit_bundle):
        report = {"command": "induce product", "status": "pass", "bundle": unit_bundle}
        bundle = parse_bundle(json.dumps(report))
        assert bundle.algebra.basis == ["e"]

    def test_report_without_bundle(self):
        with pytest.raises(BundleParseError, match="no bundle"):
            parse_bundle(json.dumps({"command": "validate", "bundle": None}))


class TestBuildWorkspace:
    """Decoding sections into engine objects."""

    def test_sections(self, unit_bundle):
        ws = build_workspace(parse_bundle(json.dumps(unit_bundle)))
        assert ws.algebra.rank == 1
        assert ws.bimodule.basis_names == ["u"]
        assert not ws.cocycle.is_zero
        assert sorted(ws.operators) == ["R"]
        assert ws.element("e").to_text() == "e"

    def test_missing_cocycle_is_zero(self, unit_bundle):
        del unit_bundle["cocycle"]
        ws = build_workspace(parse_bundle(json.dumps(unit_bundle)))
        assert ws.cocycle.is_zero
        assert ws.cocycle.arity == 2

    def test_bad_polynomial_line(self, unit_bundle):
        unit_bundle["operators"]["R"]["matrix"] = [["D^"]]
        raw = json.dumps(unit_bundle, indent=2)
        with pytest.raises(BundleParseError) as info:
            build_workspace(parse_bundle(raw), raw)
        assert info.value.line == _line_containing(raw, '"D^"')

    def test_cocycle_must_live_on_t(self, unit_bundle):
        unit_bundle["cocycle"]["on"] = "U"
        with pytest.raises(BundleParseError, match="cocycle"):
            build_workspace(parse_bundle(json.dumps(unit_bundle)))

    def test_wrong_vector_length(self, unit_bundle):
        unit_bundle["elements"]["e"] = ["1", "0"]
        with pytest.raises(BundleParseError):
            build_workspace(parse_bundle(json.dumps(unit_bundle)))

    def test_series_powers(self, unit_bundle):
        unit_bundle["series"] = {"S": {"terms": [{"power": 1, "operator": "R"}]}}
        with pytest.raises(BundleParseError, match="powers"):
            build_workspace(parse_bundle(json.dumps(unit_bundle)))

    def test_series_unknown_operator(self, unit_bundle):
        unit_bundle["series"] = {"S": {"terms": [{"power": 0, "operator": "Q"}]}}
        with pytest.raises(BundleParseError, match="unknown operator"):
            build_workspace(parse_bundle(json.dumps(unit_bundle)))

    def test_series_with_inline_matrix(self, unit_bundle):
        unit_bundle["series"] = {
            "S": {"terms": [{"power": 0, "operator": "R"}, {"power": 1, "matrix": [["2"]]}]}
        }
        ws = build_workspace(parse_bundle(json.dumps(unit_bundle)))
        assert ws.deformation("S").order == 1


class TestWorkspaceLookup:
    """Named objects and option precedence."""

    @pytest.fixture
    def ws(self, unit_bundle) -> Workspace:
        unit_bundle["options"] = {"truncation": 3, "format": "json"}
        return build_workspace(parse_bundle(json.dumps(unit_bundle)))

    def test_unknown_names(self, ws):
        with pytest.raises(KeyError, match="no operator named 'S'"):
            ws.operator("S")
        with pytest.raises(KeyError):
            ws.element("p")
        with pytest.raises(KeyError):
            ws.deformation("S")

    def test_operator_names_resolve_to_cochains(self, ws):
        c = ws.u_cochain("R")
        assert isinstance(c, UCochain)
        assert c.arity == 1

    def test_cochain_sides(self, ws):
        assert ws.t_cochain("id").arity == 1
        with pytest.raises(KeyError):
            ws.u_cochain("id")
        with pytest.raises(KeyError):
            ws.t_cochain("R")

    def test_option_precedence(self, ws):
        assert ws.truncation() == 3
        assert ws.truncation(0) == 0
        assert ws.output_format() == "json"
        assert ws.output_format("text") == "text"
        assert ws.threads() == settings.threads


class TestLoad:
    """Reading files with eager validation."""

    def test_library_files(self, data_dir):
        for name in ("fix_a.json", "fix_b.json", "fix_c.json"):
            ws = load(data_dir / name)
            assert ws.validated
            assert ws.source.endswith(name)

    def test_missing_file(self, tmp_path):
        with pytest.raises(BundleParseError, match="cannot read"):
            load(tmp_path / "absent.json")

    def test_non_associative_algebra(self, unit_bundle, write_bundle):
        unit_bundle["algebra"]["product"][0]["value"] = ["D"]
        del unit_bundle["cocycle"]
        path = write_bundle(unit_bundle)
        with pytest.raises(BundleValidationError) as info:
            load(path)
        assert not info.value.reports[0].passed
        assert info.value.reports[0].first_witness.args == ("e", "e", "e")

        ws = load(path, validate=False)
        assert ws.validation == []
        assert not ws.validated

    def test_non_cocycle_twist(self, unit_bundle, write_bundle):
        unit_bundle["cocycle"]["entries"][0]["value"] = ["D"]
        with pytest.raises(BundleValidationError) as info:
            load(write_bundle(unit_bundle))
        assert [r.passed for r in info.value.reports] == [True, True, False]
