"""End-to-end runs of the hdr-appell command line."""

import json
import os
from unittest.mock import patch

import pytest

from hdr_appell.cli import main
from hdr_appell.core.bases import BasisLabel, build_element
from hdr_appell.core.clifford import Multivector
from hdr_appell.core.mvpoly import MVPoly
from hdr_appell.core.serialize import label_from_json, poly_from_json, poly_to_json
from hdr_appell.core.verify import SuiteReport
from hdr_appell.exceptions import InvariantError


def run_cli(tmp_path, *argv, name="out.json"):
    """Run the CLI into a file and return (exit code, parsed document)."""
    path = tmp_path / name
    code = main([*argv, "--output", str(path)])
    document = json.loads(path.read_text()) if path.exists() else None
    return code, document


class TestBasisCommands:
    """Test the basis commands."""

    def test_basis_hdr(self, tmp_path):
        """Test that every element re-parses to the constructed polynomial."""
        code, document = run_cli(tmp_path, "basis-hdr", "--m", "3", "--s", "1", "--k", "2")

        assert code == 0
        assert document["command"] == "basis-hdr"
        assert document["pi_power"] == 1
        assert document["job"] == {
            "command": "basis-hdr",
            "m": 3,
            "s": 1,
            "k": 2,
            "field": "real",
            "seed": 0,
            "basis": "hdr",
            "with_oracle": True,
        }
        assert len(document["elements"]) == 7
        for entry in document["elements"]:
            label = label_from_json(entry)
            assert poly_from_json(entry) == build_element(label).poly
            assert not entry["norm2"].startswith("-") and entry["norm2"] != "0"

    def test_worked_element(self, tmp_path):
        """Test the document of x_3 e_1 + x_1 e_3."""
        code, document = run_cli(tmp_path, "basis-hdr", "--m", "3", "--s", "1", "--k", "1")
        assert code == 0
        label = BasisLabel(3, "real", 1, 1, (1,), (0,))
        entry = next(e for e in document["elements"] if label_from_json(e) == label)
        assert entry["terms"] == poly_to_json(build_element(label).poly)["terms"]

    def test_determinism(self, tmp_path):
        """Test that two runs give byte-identical output."""
        argv = ["basis-hdr", "--m", "4", "--s", "2", "--k", "2", "--field", "complex"]
        assert run_cli(tmp_path, *argv, name="a.json")[0] == 0
        assert run_cli(tmp_path, *argv, name="b.json")[0] == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_basis_gmt(self, tmp_path):
        """Test the sixteen elements of the monogenic space in R^3 of degree 1."""
        code, document = run_cli(tmp_path, "basis-gmt", "--m", "3", "--S", "0,1,2,3", "--k", "1")
        assert code == 0
        assert len(document["elements"]) == 16
        assert sum(1 for e in document["elements"] if e["lifted"]) == 6

    def test_basis_harmonic(self, tmp_path):
        """Test the harmonic basis in R^3 and the refusal of R^2."""
        code, document = run_cli(tmp_path, "basis-harmonic", "--m", "3", "--k", "2")
        assert code == 0
        assert sorted(e["mu"] for e in document["elements"]) == [[-2], [-1], [0], [1], [2]]
        assert all(e["field"] == "complex" for e in document["elements"])
        assert document["job"]["field"] == "complex"
        code, document = run_cli(tmp_path, "basis-harmonic", "--m", "2", "--k", "3", name="two.json")
        assert code == 2
        assert document is None


class TestVerifyCommand:
    """Test the verify command."""

    def test_appell(self, tmp_path):
        """Test a passing suite."""
        code, document = run_cli(
            tmp_path, "verify", "--suite", "appell", "--m", "3", "--s", "1", "--kmax", "4"
        )
        assert code == 0
        assert document["passed"] is True
        assert document["reports"][0]["suite"] == "appell"

    def test_all_suites(self, tmp_path):
        """Test --suite all on a small configuration."""
        code, document = run_cli(
            tmp_path,
            "verify",
            "--suite",
            "all",
            "--m",
            "3",
            "--s",
            "1",
            "--k",
            "1",
            "--S",
            "1,3",
            "--samples",
            "3",
            "--seed",
            "7",
        )
        assert code == 0
        assert len(document["reports"]) == 10
        assert document["seed"] == 7

    def test_missing_grade(self, tmp_path):
        """Test that kernel without --s is a usage error."""
        code, document = run_cli(tmp_path, "verify", "--suite", "kernel", "--m", "3", "--k", "1")
        assert code == 2
        assert document is None

    @patch.dict(os.environ, {"HDR_APPELL_WORKERS": "1"})
    @patch("hdr_appell.api.verify.run_suite")
    def test_failure_exit_code(self, mock_run_suite, tmp_path):
        """Test that a failed suite exits with 1 and still writes its report."""
        report = SuiteReport("kernel", {"s": 1})
        report.check("d+", False, "element 0")
        mock_run_suite.return_value = report

        code, document = run_cli(
            tmp_path, "verify", "--suite", "kernel", "--m", "3", "--s", "1", "--k", "1"
        )

        assert code == 1
        assert document["passed"] is False
        assert document["reports"][0]["failures"][0]["check"] == "d+"


class TestOtherCommands:
    """Test gram, dims and taylor."""

    def test_gram_harmonic(self, tmp_path):
        """Test that the harmonic Gram matrix is diagonal."""
        code, document = run_cli(tmp_path, "gram", "--basis", "harmonic", "--m", "3", "--k", "2")
        assert code == 0
        assert document["diagonal"] is True
        assert document["gram"]["size"] == 5
        assert "entries_im" in document["gram"]

    def test_gram_hdr(self, tmp_path):
        """Test the Gram matrix of H^1_1(R^3)."""
        code, document = run_cli(tmp_path, "gram", "--m", "3", "--s", "1", "--k", "1")
        assert code == 0
        assert document["diagonal"] is True
        assert len(document["labels"]) == 5

    def test_dims(self, tmp_path):
        """Test that every count matches the oracle rank."""
        code, document = run_cli(tmp_path, "dims", "--m", "4", "--kmax", "3")
        assert code == 0
        assert document["passed"] is True
        assert len(document["table"]) == 5 * 4
        assert all(row["matches"] for row in document["table"])

    def test_dims_without_oracle(self, tmp_path):
        """Test --no-oracle."""
        code, document = run_cli(tmp_path, "dims", "--m", "3", "--kmax", "2", "--no-oracle")
        assert code == 0
        assert "oracle_rank" not in document["table"][0]

    def test_taylor(self, tmp_path):
        """Test expansion of a polynomial read from a file."""
        g = build_element(BasisLabel(3, "complex", 1, 1, (1,), (0,))).poly * 3
        source = tmp_path / "g.json"
        source.write_text(json.dumps(poly_to_json(g)))

        code, document = run_cli(tmp_path, "taylor", "--input", str(source), "--s", "1")

        assert code == 0
        nonzero = [c for c in document["coefficients"] if c["re"] != "0" or c["im"] != "0"]
        assert len(nonzero) == 1
        assert (nonzero[0]["re"], nonzero[0]["im"]) == ("3", "0")
        assert document["job"]["field"] == "complex"
        assert document["job"]["m"] == 3
        assert document["chain_mismatches"] == 0

    def test_taylor_four_dimensions(self, tmp_path):
        """Test that a basis element of C_4 expands to itself."""
        label = BasisLabel(4, "complex", 1, 1, (0, 0), (0, 0))
        source = tmp_path / "g.json"
        source.write_text(json.dumps(poly_to_json(build_element(label).poly)))

        code, document = run_cli(tmp_path, "taylor", "--input", str(source), "--s", "1")

        assert code == 0
        nonzero = [c for c in document["coefficients"] if c["re"] != "0" or c["im"] != "0"]
        assert [label_from_json(c["label"]) for c in nonzero] == [label]
        assert (nonzero[0]["re"], nonzero[0]["im"]) == ("1", "0")
        assert document["chain_mismatches"] >= 1

    def test_taylor_grade_out_of_range(self, tmp_path):
        """Test that a grade beyond the input dimension is a usage error."""
        source = tmp_path / "g.json"
        source.write_text(json.dumps(poly_to_json(build_element(BasisLabel(3, "real", 1, 1, (1,), (0,))).poly)))
        code, document = run_cli(tmp_path, "taylor", "--input", str(source), "--s", "7")
        assert code == 2
        assert document is None
        assert main(["taylor", "--input", str(source), "--s", "1", "--m", "3"]) == 2

    def test_taylor_inadmissible_input(self, tmp_path):
        """Test that a non-monogenic input polynomial is a usage error."""
        source = tmp_path / "g.json"
        x1e1 = MVPoly.variable(3, "real", 1) * Multivector.basis_vector(3, "real", 1)
        source.write_text(json.dumps(poly_to_json(x1e1)))
        assert main(["taylor", "--input", str(source), "--s", "1"]) == 2

    def test_taylor_bad_input(self, tmp_path):
        """Test unreadable and malformed input files."""
        assert main(["taylor", "--input", str(tmp_path / "missing.json"), "--s", "1"]) == 2
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        assert main(["taylor", "--input", str(broken), "--s", "1"]) == 2


class TestInternalErrors:
    """Test the internal error exit code."""

    @pytest.mark.parametrize("error", [InvariantError("broken chain"), RuntimeError("boom")])
    def test_internal_error(self, error, tmp_path):
        """Test that internal errors exit with 3."""
        with patch("hdr_appell.cli.run", side_effect=error):
            code, document = run_cli(tmp_path, "basis-hdr", "--m", "3", "--s", "1", "--k", "1")
        assert code == 3
        assert document is None
