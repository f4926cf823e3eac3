"""
End-to-end tests for the ccalg command line.

Each test runs ``ccalg.cli.main`` on the bundled fixture files and checks
the exit code together with the printed report.
"""

import json

import pytest

from ccalg.cli import main
from ccalg.commands import operators
from conformal.reports import CheckReport
from trb.checks import GRAPH_ANCHOR

pytestmark = pytest.mark.integration


@pytest.fixture
def fix_a_file(data_dir):
    return str(data_dir / "fix_a.json")


@pytest.fixture
def fix_b_file(data_dir):
    return str(data_dir / "fix_b.json")


@pytest.fixture
def fix_c_file(data_dir):
    return str(data_dir / "fix_c.json")


def run_json(capsys, argv):
    """Run with --format json and return (exit code, parsed report)."""
    code = main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def check(report, suffix):
    return next(c for c in report["checks"] if c["name"].endswith(suffix))


class TestValidate:
    """Loading and eager validation."""

    def test_library_files(self, capsys, fix_a_file, fix_b_file, fix_c_file):
        assert main(["validate", fix_a_file, fix_b_file, fix_c_file]) == 0
        out = capsys.readouterr().out
        assert out.count("status: PASS") == 3

    def test_report_fields(self, capsys, fix_c_file):
        code, report = run_json(capsys, ["validate", fix_c_file])
        assert code == 0
        assert report["status"] == "pass"
        assert report["data"]["rank_T"] == 4
        assert len(report["checks"]) == 3

    def test_broken_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "algebra": {\n    "basis": ["e"],\n  }\n}', encoding="utf-8")
        assert main(["validate", str(path)]) == 2
        err = capsys.readouterr().err
        assert "error CA001 (parse)" in err
        assert "line: 4" in err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["validate", str(tmp_path / "absent.json"), "--format", "json"]) == 2
        assert json.loads(capsys.readouterr().out)["error_code"] == "CA001"

    def test_non_associative_bundle(self, capsys, tmp_path):
        bundle = {
            "algebra": {"basis": ["e"], "product": [{"args": [1, 1], "value": ["D"]}]},
            "bimodule": {"basis": ["u"], "regular": True},
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bundle), encoding="utf-8")
        assert main(["validate", str(path)]) == 1
        assert "error CA010" in capsys.readouterr().err

        assert main(["validate", "--no-validate", str(path)]) == 1
        assert "[FAIL] associativity" in capsys.readouterr().out

    def test_worst_exit_code_wins(self, capsys, fix_a_file, tmp_path):
        assert main(["validate", fix_a_file, str(tmp_path / "absent.json")]) == 2

    def test_usage_errors(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate", "x.json"])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0


class TestOperatorCommands:
    """check-trb, graph-check, induce and cohomology."""

    def test_check_trb(self, capsys, fix_a_file):
        assert main(["check-trb", fix_a_file]) == 0
        assert main(["check-trb", "--op", "Rbad", fix_a_file]) == 1
        out = capsys.readouterr().out
        assert "(u1, u1): -e1" in out
        assert out.rstrip().endswith("status: FAIL")

    def test_graph_check(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["graph-check", "--op", "Rbad", fix_a_file])
        assert code == 1
        assert report["data"] == {"agrees": True, "check_trb": False}
        assert check(report, "agrees with check_trb")["passed"]

    def test_graph_check_disagreement_fails(self, capsys, fix_a_file, monkeypatch):
        def closed_graph(R, H):
            return CheckReport(f"graph subalgebra ({R.name})", GRAPH_ANCHOR, checked=4)

        monkeypatch.setattr(operators, "graph_check", closed_graph)
        code, report = run_json(capsys, ["graph-check", "--op", "Rbad", fix_a_file])
        assert code == 1
        assert report["data"] == {"agrees": False, "check_trb": False}
        agreement = check(report, "agrees with check_trb")
        assert not agreement["passed"]
        assert agreement["witnesses"][0]["args"] == ["Rbad"]
        assert agreement["witnesses"][0]["residual"] == "graph closed: True, identity holds: False"

    def test_unknown_operator(self, capsys, fix_a_file):
        assert main(["check-trb", "--op", "Q", fix_a_file]) == 2
        assert "CA003" in capsys.readouterr().err

    def test_induce_output_reloads(self, capsys, fix_a_file, tmp_path):
        code, report = run_json(capsys, ["induce", "product", fix_a_file])
        assert code == 0
        assert report["command"] == "induce product"
        assert report["data"]["product"] == {"1,1": ["0", "2"]}
        path = tmp_path / "induced.json"
        path.write_text(json.dumps(report), encoding="utf-8")
        assert main(["validate", str(path)]) == 0

    def test_induce_bimodule_output_reloads(self, capsys, fix_b_file, tmp_path):
        code, report = run_json(capsys, ["induce", "bimodule", fix_b_file])
        assert code == 0
        assert report["command"] == "induce bimodule"
        assert report["data"] == {"left": {"1,1": ["1"]}, "right": {"1,1": ["1"]}}
        assert [c["name"] for c in report["checks"]] == ["bimodule"]
        path = tmp_path / "induced.json"
        path.write_text(json.dumps(report), encoding="utf-8")
        assert main(["validate", str(path)]) == 0

    def test_induce_needs_a_kind(self, capsys, fix_a_file):
        with pytest.raises(SystemExit) as info:
            main(["induce", fix_a_file])
        assert info.value.code == 2

    def test_cohomology_uses_bundle_truncation(self, capsys, fix_b_file):
        code, report = run_json(capsys, ["cohomology", "--degree", "1", fix_b_file])
        assert code == 0
        assert report["data"]["truncation"] == 1
        assert report["data"]["dim_cocycles"] == 1

        _, report = run_json(capsys, ["cohomology", "--degree", "1", "--trunc", "0", "--route", "linf", fix_b_file])
        assert report["data"]["dim_cocycles"] == 0
        assert report["data"]["route"] == "linf"

    def test_twisted_delta_sign(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["twisted-delta", "--cochain", "g", fix_a_file])
        assert code == 0
        assert report["data"]["name"] == "dg"
        assert "dg" in report["bundle"]["cochains"]


class TestConstructions:
    """Twists, perturbations and inverses."""

    def test_twist_coboundary(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["twist-coboundary", "--cochain", "h", fix_a_file])
        assert code == 0
        assert report["bundle"]["cocycle"]["on"] == "T"

    def test_perturb_xi(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["perturb", "--cochain", "h", fix_a_file])
        assert code == 0
        assert [c["name"] for c in report["checks"]][-1] == "induced isomorphism"

    def test_perturb_phi_reloads(self, capsys, fix_a_file, tmp_path):
        code, report = run_json(capsys, ["perturb", "--cochain", "k", "--mode", "phi", fix_a_file])
        assert code == 0
        assert report["data"]["operator"] == "R_k"
        assert report["data"]["matrix"] == [["0", "0"], ["1/2", "0"]]
        path = tmp_path / "perturbed.json"
        path.write_text(json.dumps(report), encoding="utf-8")
        assert main(["check-trb", "--op", "R_k", str(path)]) == 0

    def test_perturb_needs_a_cochain_on_t(self, capsys, fix_a_file):
        assert main(["perturb", "--cochain", "g", fix_a_file]) == 2

    def test_from_inverse(self, capsys, fix_b_file):
        code, report = run_json(capsys, ["from-inverse", "--cochain", "id", fix_b_file])
        assert code == 0
        assert report["data"]["matrix"] == [["1"]]
        assert report["data"]["cocycle"] == {"e,e": "-u"}


class TestBrackets:
    """bracket, mc-residual and dR."""

    def test_binary_bracket(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["bracket", "--binary", "g", "g", fix_a_file])
        assert code == 0
        assert report["data"]["arity"] == 2
        assert report["data"]["name"] == "[g,g]"

    def test_mc_residual(self, capsys, fix_a_file):
        assert main(["mc-residual", fix_a_file]) == 0
        assert main(["mc-residual", "--op", "Rbad", fix_a_file]) == 1

    def test_differential(self, capsys, fix_b_file):
        code, report = run_json(capsys, ["dR", "--cochain", "R", fix_b_file])
        assert code == 0
        assert report["data"]["value"] == {"u,u": "-e"}


class TestDeformationCommands:
    """deform linear/formal/equiv, nijenhuis and rigidity."""

    def test_linear_failure_witness(self, capsys, fix_a_file):
        code, report = run_json(capsys, ["deform", "linear", "--op1", "R1bad", fix_a_file])
        assert code == 1
        first_order = check(report, ": t^1")
        assert not first_order["passed"]
        assert first_order["witnesses"][0]["args"] == ["u1", "u1"]
        assert first_order["witnesses"][0]["residual"] == "-2*e1"

    def test_linear_cocycle(self, capsys, fix_a_file):
        _, report = run_json(capsys, ["deform", "linear", "--op1", "R1", fix_a_file])
        assert check(report, ": t^0")["passed"]
        assert check(report, ": t^1")["passed"]

    def test_formal(self, capsys, fix_a_file):
        assert main(["deform", "formal", "--series", "Rt", fix_a_file]) == 0
        assert main(["deform", "formal", "--series", "Rbad_t", fix_a_file]) == 1

    def test_equivalence(self, capsys, fix_a_file):
        argv = ["deform", "equiv", "--op1", "R1", "--op1-prime", "R1", "--element", "p", fix_a_file]
        assert main(argv) == 0

    def test_nijenhuis(self, capsys, fix_a_file, fix_c_file):
        assert main(["nijenhuis", "--element", "p", fix_a_file]) == 0
        capsys.readouterr()
        code, report = run_json(capsys, ["nijenhuis", "--element", "p", fix_c_file])
        assert code == 1
        assert report["data"]["nijenhuis"] is False
        assert not check(report, ": commutators")["passed"]

    def test_rigidity_unsolved(self, capsys, fix_b_file):
        code, report = run_json(capsys, ["rigidity", fix_b_file])
        assert code == 1
        assert report["data"]["witnessed"] is False
        assert report["data"]["entries"][0]["status"] == "unsolved-at-this-truncation"
