"""Unit tests for reports, seeded sampling and the quick suites."""

import pytest

from hdr_appell.core.ball import gram_matrix
from hdr_appell.core.mvpoly import MVPoly
from hdr_appell.core.sampling import make_rng, random_combination, random_poly, random_scalar
from hdr_appell.core.verify import SUITES, SuiteReport, run_suite
from hdr_appell.exceptions import DomainError


class TestSampling:
    """Test seeded random generators."""

    def test_same_seed_same_samples(self):
        """Test that a seed fixes every sample."""
        first, second = make_rng(11), make_rng(11)
        for _ in range(5):
            assert random_poly(first, 3, "complex", degree=3) == random_poly(second, 3, "complex", degree=3)

    def test_nonzero_scalar(self):
        """Test that nonzero draws are never zero."""
        rng = make_rng(0)
        assert all(random_scalar(rng, "real", nonzero=True) for _ in range(50))

    def test_grades_are_respected(self):
        """Test grade-restricted polynomials."""
        p = random_poly(make_rng(3), 4, "real", degree=2, terms=5, grades=[2])
        assert set(p.grades()) <= {2}

    def test_combination(self):
        """Test that the returned sum matches the coefficients."""
        polys = [MVPoly.variable(3, "real", i) for i in (1, 2, 3)]
        coeffs, total = random_combination(make_rng(4), polys, "real")
        expected = MVPoly.zero(3, "real")
        for c, p in zip(coeffs, polys):
            expected = expected + p * c
        assert total == expected

    def test_empty_combination(self):
        """Test that an empty family is rejected."""
        with pytest.raises(DomainError):
            random_combination(make_rng(0), [], "real")


class TestSuiteReport:
    """Test report bookkeeping."""

    def test_check_counts(self):
        """Test that checks are counted and failures recorded."""
        report = SuiteReport("kernel", {})
        assert report.check("a", True)
        assert not report.check("b", False, "detail", "witness")
        assert report.checks == 2
        assert not report.passed
        assert report.failures[0].check == "b"
        assert report.failures[0].witness == "witness"

    def test_check_gram(self):
        """Test the orthogonality and positivity checks."""
        one = MVPoly.scalar(3, "real")
        x1 = MVPoly.variable(3, "real", 1)
        report = SuiteReport("orthogonality", {})
        report.check_gram(gram_matrix([one, x1 * x1, MVPoly.zero(3, "real")]), ["1", "x1^2", "0"])
        assert [f.check for f in report.failures] == ["orthogonality", "positive-norms"]
        assert "(1, x1^2)" in report.failures[0].detail

    def test_check_span(self):
        """Test that span failures carry a witness."""
        x1, x2 = MVPoly.variable(3, "real", 1), MVPoly.variable(3, "real", 2)
        report = SuiteReport("completeness", {})
        report.check_span([x1], [x1, x2])
        assert report.data["oracle_rank"] == 2
        assert report.failures[0].witness == x2


class TestRunSuite:
    """Test suite dispatch and the quick suites."""

    def test_unknown_suite(self):
        """Test that unknown names raise DomainError."""
        with pytest.raises(DomainError):
            run_suite("nonsense")

    def test_registry(self):
        """Test the registered suites."""
        assert sorted(SUITES) == [
            "algebra",
            "appell",
            "branching",
            "completeness",
            "gmt",
            "harmonic",
            "invariance",
            "kernel",
            "orthogonality",
            "taylor",
        ]

    @pytest.mark.parametrize(
        "name,params",
        [
            ("kernel", {"s": 1, "m": 3, "k": 2}),
            ("orthogonality", {"s": 2, "m": 4, "k": 1}),
            ("completeness", {"s": 1, "m": 3, "k": 1}),
            ("appell", {"s": 1, "m": 3, "kmax": 2}),
            ("branching", {"s": 1, "m": 3, "k": 1}),
            ("gmt", {"grades": [0, 1, 2, 3], "m": 3, "k": 1}),
            ("harmonic", {"m": 3, "k": 2}),
            ("algebra", {"m": 3, "samples": 20, "seed": 1}),
            ("taylor", {"s": 1, "m": 3, "kmax": 1, "samples": 3, "seed": 1}),
            ("invariance", {"s": 1, "m": 3, "k": 1}),
        ],
    )
    def test_quick_suites_pass(self, name, params):
        """Test that each suite passes on a small configuration."""
        report = run_suite(name, **params)
        assert report.passed, [(f.check, f.detail) for f in report.failures]
        assert report.checks > 0
        assert report.suite == name

    def test_branching_counts_right_reading(self):
        """Test that the right-multiplication reading breaks grade purity."""
        report = run_suite("branching", s=1, m=3, k=1)
        assert report.data["alternative_reading_failures"] >= 1

    def test_trivial_space(self):
        """Test that s = m with k >= 1 has no basis elements."""
        assert run_suite("kernel", s=3, m=3, k=1).data["count"] == 0
        report = run_suite("branching", s=3, m=3, k=1)
        assert report.passed
        assert report.data["trivial"] is True

    def test_completeness_records_oracle_rank(self):
        """Test that completeness records the oracle dimension."""
        report = run_suite("completeness", s=1, m=3, k=2)
        assert report.data["oracle_rank"] == 7
