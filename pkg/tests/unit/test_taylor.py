"""Unit tests for the generalized Taylor expansion."""

import pytest
from sympy.polys.domains import QQ

from hdr_appell.core.bases import blade_e, build_element, labels_up_to
from hdr_appell.core.clifford import Multivector
from hdr_appell.core.mvpoly import MVPoly
from hdr_appell.core.scalars import coerce, imaginary_unit, scalar
from hdr_appell.core.taylor import (
    TaylorCoefficient,
    chain_mismatches,
    resolve_components,
    t2_derivative,
    taylor_coefficients,
    taylor_reconstruct,
)
from hdr_appell.exceptions import DomainError


@pytest.fixture
def real_labels():
    """Labels of H^1_k(R^3), k = 0..2."""
    return labels_up_to(1, 3, 2, "real")


@pytest.fixture
def complex_labels():
    """Labels of H^1_k(R^3) in the complex algebra, k = 0..1."""
    return labels_up_to(1, 3, 1, "complex")


class TestDimensionTwoDerivative:
    """Test the derivative d_{t_2}."""

    def test_complex(self):
        """Test (1/2)(d_1 +- i d_2)(x_1 - i x_2)."""
        i = imaginary_unit()
        z_bar = MVPoly.variable(2, "complex", 1) - MVPoly.variable(2, "complex", 2) * i
        assert t2_derivative(z_bar, 1) == MVPoly.scalar(2, "complex")
        assert not t2_derivative(z_bar, -1)

    def test_real(self):
        """Test (1/2)(d_1 + e_12 d_2)(x_1 - e_12 x_2) = 1."""
        e12 = Multivector.blade(2, "real", (1, 2))
        z_bar = MVPoly.variable(2, "real", 1) - e12 * MVPoly.variable(2, "real", 2)
        assert t2_derivative(z_bar, 1) == MVPoly.scalar(2, "real")

    def test_sign_is_checked(self):
        """Test that t_2 must be +-1."""
        with pytest.raises(DomainError):
            t2_derivative(MVPoly.variable(2, "real", 1), 0)


class TestComponents:
    """Test the split g = sum_nu g^nu e^{s,nu}."""

    @pytest.mark.parametrize("field", ["real", "complex"])
    def test_components_rebuild_the_polynomial(self, field):
        """Test that the scalar components recombine to g."""
        g = build_element(labels_up_to(1, 3, 2, field)[-1]).poly
        components = resolve_components(g, 1, 3, field)
        total = MVPoly.zero(3, field)
        for nu, component in components.items():
            total = total + component * blade_e(3, 1, nu, field)
        assert total == g

    def test_wrong_grade(self):
        """Test that mixed grades are rejected."""
        with pytest.raises(DomainError):
            resolve_components(MVPoly.constant(Multivector.blade(3, "real", (1, 2))), 1, 3, "real")


class TestCoefficients:
    """Test coefficient extraction and reconstruction."""

    def test_real_projection(self, real_labels):
        """Test that projection recovers a rational combination in R_{0,3}."""
        coeffs = [QQ(index % 4, index + 1) for index in range(len(real_labels))]
        g = taylor_reconstruct(coeffs, real_labels, 3, "real")
        found = taylor_coefficients(g, 1, 3, 2, "real")
        assert [c.label for c in found] == real_labels
        assert [c.value for c in found] == coeffs
        assert all(c.chain_value.dim == 3 for c in found)

    def test_complex_combination(self, complex_labels):
        """Test that Gaussian rational coefficients in C_3 are recovered and match the chain."""
        coeffs = [scalar("complex", index - 3, QQ(1, index + 1)) for index in range(len(complex_labels))]
        coeffs[2] = scalar("complex", 0)
        g = taylor_reconstruct(coeffs, complex_labels, 3, "complex")
        found = taylor_coefficients(g, 1, 3, 1, "complex")
        assert [c.value for c in found] == coeffs
        assert all(c.chain_agrees for c in found)
        assert chain_mismatches(found) == 0

    def test_single_element(self, complex_labels):
        """Test that a basis element has one nonzero coefficient equal to 1."""
        label = complex_labels[-1]
        found = taylor_coefficients(build_element(label).poly, 1, 3, 1, "complex")
        assert [c.label for c in found if c.value] == [label]
        assert found[-1].value == coerce("complex", 1)

    def test_reconstruct_accepts_records(self, real_labels):
        """Test reconstruction from TaylorCoefficient records."""
        g = build_element(real_labels[4]).poly * 3
        found = taylor_coefficients(g, 1, 3, 2, "real")
        assert isinstance(found[0], TaylorCoefficient)
        assert taylor_reconstruct(found, real_labels, 3, "real") == g

    @pytest.mark.parametrize("s", [1, 2])
    def test_complex_round_trip_in_four_dimensions(self, s):
        """Test exact recovery in C_4, where the derivative chain is not triangular."""
        labels = labels_up_to(s, 4, 2, "complex")
        coeffs = [scalar("complex", QQ(index % 5 - 2, 3), index % 3) for index in range(len(labels))]
        g = taylor_reconstruct(coeffs, labels, 4, "complex")
        found = taylor_coefficients(g, s, 4, 2, "complex")
        assert [c.label for c in found] == labels
        assert [c.value for c in found] == coeffs
        assert taylor_reconstruct(found, labels, 4, "complex") == g

    def test_projection_overrides_chain_in_four_dimensions(self):
        """Test that a single element of C_4 gets a unit coefficient vector."""
        labels = labels_up_to(1, 4, 1, "complex")
        label = next(lb for lb in labels if lb.k == 1 and lb.nu == (0, 0) and lb.mu == (0, 0))
        found = taylor_coefficients(build_element(label).poly, 1, 4, 1, "complex")
        assert [c.label for c in found if c.value] == [label]
        assert next(c for c in found if c.label == label).value == coerce("complex", 1)
        assert chain_mismatches(found) >= 1
        assert all(c.chain_agrees == (c.chain_value.scalar_part() == c.value) for c in found)

    def test_inadmissible_input(self):
        """Test non-monogenic, wrong grade, wrong degree and wrong space."""
        x1 = MVPoly.variable(3, "real", 1)
        e1 = Multivector.basis_vector(3, "real", 1)
        with pytest.raises(DomainError):
            taylor_coefficients(x1 * e1, 1, 3, 2, "real")
        with pytest.raises(DomainError):
            taylor_coefficients(MVPoly.scalar(3, "real"), 1, 3, 2, "real")
        with pytest.raises(DomainError):
            taylor_coefficients(build_element(labels_up_to(1, 3, 2)[-1]).poly, 1, 3, 1, "real")
        with pytest.raises(DomainError):
            taylor_coefficients(MVPoly.constant(e1), 1, 4, 0, "real")

    def test_reconstruct_checks(self, real_labels):
        """Test length and label checks of reconstruction."""
        with pytest.raises(DomainError):
            taylor_reconstruct([1], real_labels, 3, "real")
        with pytest.raises(DomainError):
            taylor_reconstruct([1], real_labels[:1], 4, "real")
        assert not taylor_reconstruct([], [], 3, "real")
