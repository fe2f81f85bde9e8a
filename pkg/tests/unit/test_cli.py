"""Unit tests for job specifications and argument parsing."""

import argparse
import json

import pytest

from hdr_appell.cli import (
    JobSpec,
    _grade_list,
    bind_input,
    build_parser,
    job_from_args,
    main,
    write_output,
)
from hdr_appell.core.mvpoly import MVPoly
from hdr_appell.core.serialize import poly_to_json
from hdr_appell.exceptions import UsageError


class TestJobSpec:
    """Test JobSpec validation and derived parameters."""

    @pytest.mark.parametrize(
        "job",
        [
            JobSpec("basis-hdr", m=2, s=1, k=1),
            JobSpec("basis-hdr", m=3, s=4, k=1),
            JobSpec("basis-hdr", m=3, s=1, k=-1),
            JobSpec("basis-hdr", m=3, k=1),
            JobSpec("basis-gmt", m=3, grades=(), k=1),
            JobSpec("basis-gmt", m=3, grades=(0, 4), k=1),
            JobSpec("basis-harmonic", m=1, k=1),
            JobSpec("gram", m=3, k=1, basis="gmt"),
            JobSpec("gram", m=3, s=1, k=1, basis="cubic"),
            JobSpec("verify", m=3, suite="kernel", k=1),
            JobSpec("verify", m=3, suite="appell", s=1),
            JobSpec("verify", m=3, suite="spin", s=1, k=1),
            JobSpec("verify", m=3, suite="algebra", samples=0),
            JobSpec("basis-harmonic", m=2, k=3),
            JobSpec("taylor", s=1),
            JobSpec("dims", m=3),
            JobSpec("basis-hdr", m=3, s=1, k=1, field="quaternion"),
        ],
    )
    def test_invalid_jobs(self, job):
        """Test that out-of-range or incomplete jobs raise UsageError."""
        with pytest.raises(UsageError) as exc_info:
            job.validate()
        assert exc_info.value.exit_code == 2

    def test_missing_flags_are_named(self):
        """Test that the error names the missing flags."""
        with pytest.raises(UsageError, match="--S"):
            JobSpec("basis-gmt", m=3, k=1).validate()

    def test_valid_jobs(self):
        """Test jobs that pass validation."""
        JobSpec("basis-harmonic", m=3, k=3).validate()
        JobSpec("verify", m=3, suite="appell", s=1, k=2).validate()
        JobSpec("verify", m=3, suite="all").validate()
        JobSpec("gram", m=3, k=1, basis="harmonic").validate()

    def test_suite_params(self):
        """Test the parameters handed to each suite."""
        job = JobSpec("verify", m=3, s=1, k=2, suite="all", seed=5, samples=7, field="complex")
        assert job.suite_params("appell") == {"s": 1, "m": 3, "kmax": 2, "field": "complex"}
        assert job.suite_params("taylor") == {
            "s": 1,
            "m": 3,
            "kmax": 2,
            "seed": 5,
            "samples": 7,
            "field": "complex",
        }
        assert job.suite_params("harmonic") == {"m": 3, "k": 2}
        assert job.suite_params("gmt") is None

    def test_all_suites_skip_missing_parameters(self):
        """Test that --suite all runs what the flags allow."""
        names = [name for name, _ in JobSpec("verify", m=3, s=1, k=1, suite="all").suite_jobs()]
        assert "gmt" not in names
        assert names == sorted(names)
        assert len(names) == 9

        only_algebra = JobSpec("verify", m=3, suite="all").suite_jobs()
        assert [name for name, _ in only_algebra] == ["algebra"]

    def test_recorded(self):
        """Test the job record written into output documents."""
        job = JobSpec("basis-gmt", m=3, grades=(0, 2), k=1, output="out.json")
        assert job.recorded() == {
            "command": "basis-gmt",
            "m": 3,
            "grades": [0, 2],
            "k": 1,
            "field": "real",
            "seed": 0,
            "basis": "hdr",
            "with_oracle": True,
        }


class TestParser:
    """Test argument parsing."""

    def test_grade_list(self):
        """Test comma-separated grade sets."""
        assert _grade_list("3,0,1,1") == (0, 1, 3)
        assert _grade_list("2,") == (2,)
        with pytest.raises(argparse.ArgumentTypeError):
            _grade_list("one,two")

    def test_job_from_args(self):
        """Test that parsed flags become a JobSpec."""
        args = build_parser().parse_args(
            ["basis-gmt", "--m", "4", "--S", "1,3", "--k", "2", "--field", "complex", "-o", "x.json"]
        )
        job = job_from_args(args)
        assert job == JobSpec("basis-gmt", m=4, grades=(1, 3), k=2, field="complex", output="x.json")

    def test_dims_oracle_flag(self):
        """Test --no-oracle."""
        args = build_parser().parse_args(["dims", "--m", "3", "--kmax", "2", "--no-oracle"])
        assert job_from_args(args).with_oracle is False

    @pytest.mark.parametrize("flags", [["--m", "3"], ["--field", "complex"]])
    def test_taylor_takes_space_from_input(self, flags):
        """Test that taylor has no --m or --field flag."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["taylor", "--input", "g.json", "--s", "1", *flags])


class TestBindInput:
    """Test reading the polynomial of a taylor job."""

    @pytest.fixture
    def complex_input(self, tmp_path):
        """An m = 3 complex polynomial document on disk."""
        path = tmp_path / "g.json"
        path.write_text(json.dumps(poly_to_json(MVPoly.scalar(3, "complex", 2))))
        return str(path)

    def test_binds_dimension_and_field(self, complex_input):
        """Test that the recorded job carries the input's m and field."""
        job, g = bind_input(JobSpec("taylor", s=0, input=complex_input))
        assert (job.m, job.field) == (3, "complex")
        assert g == MVPoly.scalar(3, "complex", 2)
        assert job.recorded()["field"] == "complex"

    @pytest.mark.parametrize("s", [-1, 4, 7])
    def test_grade_out_of_range(self, complex_input, s):
        """Test that --s is checked against the input dimension."""
        with pytest.raises(UsageError, match=r"--s must lie in 0\.\.3") as exc_info:
            bind_input(JobSpec("taylor", s=s, input=complex_input))
        assert exc_info.value.exit_code == 2

    def test_dimension_mismatch(self, complex_input):
        """Test that an explicit m must match the input."""
        with pytest.raises(UsageError, match="does not match"):
            bind_input(JobSpec("taylor", m=4, s=1, input=complex_input))

    def test_malformed_document(self, tmp_path):
        """Test that a document without terms is a usage error."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"m": 3, "field": "real"}))
        with pytest.raises(UsageError, match="Malformed"):
            bind_input(JobSpec("taylor", s=1, input=str(path)))


class TestMain:
    """Test exit codes that need no computation."""

    def test_bad_flag(self, capsys):
        """Test that argparse errors exit with 2."""
        assert main(["basis-hdr", "--m", "3", "--s", "1"]) == 2
        assert "--k" in capsys.readouterr().err

    def test_unknown_command(self):
        """Test an unknown command."""
        assert main(["frobnicate"]) == 2

    def test_dimension_too_small(self, capsys):
        """Test that m = 2 is a usage error for Hodge-de Rham bases."""
        assert main(["basis-hdr", "--m", "2", "--s", "1", "--k", "1"]) == 2
        assert "hdr-appell: error: --m must be at least 3" in capsys.readouterr().err

    def test_version(self, capsys):
        """Test --version."""
        assert main(["--version"]) == 0
        assert "hdr-appell" in capsys.readouterr().out


class TestWriteOutput:
    """Test output writing."""

    def test_writes_file(self, tmp_path):
        """Test that the file is replaced and no temporary file remains."""
        path = tmp_path / "out.json"
        path.write_text("old")
        write_output('{"a": 1}\n', str(path))
        assert json.loads(path.read_text()) == {"a": 1}
        assert [p.name for p in tmp_path.iterdir()] == ["out.json"]

    def test_writes_stdout(self, capsys):
        """Test that no path means stdout."""
        write_output("text\n", None)
        assert capsys.readouterr().out == "text\n"
