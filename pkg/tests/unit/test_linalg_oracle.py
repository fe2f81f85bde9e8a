"""Unit tests for exact elimination and the brute-force oracles."""

import pytest
from sympy.polys.domains import QQ

from hdr_appell.core.bases import hdr_basis
from hdr_appell.core.clifford import Multivector
from hdr_appell.core.linalg import (
    CoordinateBasis,
    LinearSystem,
    check_span_equality,
    from_vector,
    kernel,
    rank,
    rref,
    to_vector,
)
from hdr_appell.core.mvpoly import MVPoly, dirac, dirac_minus, dirac_plus, laplacian
from hdr_appell.core.oracle import HARMONIC, HDR, MONOGENIC, constraint_system, oracle_space
from hdr_appell.exceptions import DomainError


def x(i, m=3):
    return MVPoly.variable(m, "real", i)


class TestCoordinates:
    """Test coordinate bases and vector conversion."""

    def test_for_space(self):
        """Test the size of the degree-1 vector-valued coordinate space."""
        assert len(CoordinateBasis.for_space(3, 1, [1])) == 9
        assert len(CoordinateBasis.for_space(3, 2, [0, 3])) == 12

    def test_round_trip(self):
        """Test that a polynomial survives conversion to a vector."""
        p = x(1) * Multivector.basis_vector(3, "real", 2) - x(3) * 4
        basis = CoordinateBasis.spanning([p])
        assert from_vector(to_vector(p, basis), basis, 3, "real") == p

    def test_unknown_coordinate(self):
        """Test that coordinates outside the basis are rejected."""
        basis = CoordinateBasis.for_space(3, 1, [0])
        with pytest.raises(DomainError):
            basis.index(((2, 0, 0), ()))


class TestElimination:
    """Test rref, kernel and rank."""

    def test_rref_rank(self):
        """Test the rank of a small system."""
        basis = CoordinateBasis.for_space(2, 1, [0])
        system = LinearSystem(basis, "real", [{0: QQ(2), 1: QQ(2)}, {0: QQ(1), 1: QQ(1)}])
        echelon = rref(system)
        assert echelon.rank == 1
        assert echelon.rows == [{0: QQ(1), 1: QQ(1)}]

    def test_kernel(self):
        """Test the nullspace of x + y = 0."""
        basis = CoordinateBasis.for_space(2, 1, [0])
        vectors = kernel(LinearSystem(basis, "real", [{0: QQ(1), 1: QQ(1)}]))
        assert vectors == [{1: QQ(1), 0: QQ(-1)}]

    def test_empty_system(self):
        """Test that no constraints leave every coordinate free."""
        basis = CoordinateBasis.for_space(3, 1, [0])
        assert len(kernel(LinearSystem(basis, "real", []))) == 3

    def test_rank_of_polynomials(self):
        """Test exact rank of dependent polynomials."""
        assert rank([x(1), x(1) * 2, x(2)]) == 2
        assert rank([]) == 0


class TestSpanEquality:
    """Test the two-sided span comparison."""

    def test_equal_spans(self):
        """Test two bases of the same plane."""
        report = check_span_equality([x(1) + x(2), x(1) - x(2)], [x(1), x(2)])
        assert report.passed
        assert report.witness([x(1) + x(2), x(1) - x(2)], [x(1), x(2)]) is None

    def test_missing_direction(self):
        """Test that an oracle element outside the span is reported."""
        constructed = [x(1)]
        oracle = [x(1), x(2)]
        report = check_span_equality(constructed, oracle)
        assert not report.passed
        assert report.unspanned_oracle == [1]
        assert report.witness(constructed, oracle) == x(2)

    def test_dependent_family(self):
        """Test that a dependent constructed family fails."""
        report = check_span_equality([x(1), x(1) * 3], [x(1), x(2)])
        assert any(failure.startswith("dependence") for failure in report.failures)

    def test_mixed_fields(self):
        """Test that fields must agree."""
        with pytest.raises(DomainError):
            check_span_equality([x(1)], [MVPoly.variable(3, "complex", 1)])


class TestOracle:
    """Test the kernels of the defining systems."""

    def test_riesz_dimension(self):
        """Test dim H^1_1(R^3) = 5."""
        assert len(oracle_space(HDR, 3, 1, s=1)) == 5

    def test_oracle_elements_solve_the_system(self):
        """Test that every oracle element is in ker d+ and ker d-."""
        for f in oracle_space(HDR, 4, 2, s=2):
            assert f.is_grade_pure(2) and f.is_homogeneous(2)
            assert not dirac_plus(f) and not dirac_minus(f)

    def test_harmonic_dimension(self):
        """Test dim of the degree-k harmonics in R^3 is 2k + 1."""
        for k in range(4):
            space = oracle_space(HARMONIC, 3, k, "complex")
            assert len(space) == 2 * k + 1
            assert all(not laplacian(h) for h in space)

    def test_monogenic_dimension(self):
        """Test that degree-1 monogenic polynomials with all grades in R^3 have dimension 16."""
        space = oracle_space(MONOGENIC, 3, 1)
        assert len(space) == 16
        assert all(not dirac(f) for f in space)

    def test_matches_constructed_basis(self):
        """Test span equality with the constructed basis of H^2_2(R^4)."""
        constructed = [e.poly for e in hdr_basis(2, 4, 2)]
        assert check_span_equality(constructed, oracle_space(HDR, 4, 2, s=2)).passed

    def test_deterministic(self):
        """Test that repeated runs give identical bases."""
        assert oracle_space(HDR, 3, 2, s=1) == oracle_space(HDR, 3, 2, s=1)

    def test_argument_checks(self):
        """Test constraint names, grades and ranges."""
        with pytest.raises(DomainError):
            constraint_system("wave", 3, 1, "real", [0])
        with pytest.raises(DomainError):
            oracle_space(HDR, 3, 1)
        with pytest.raises(DomainError):
            oracle_space(MONOGENIC, 3, 1, grades=[5])
