"""
Generalized Taylor expansion in the Gelfand-Tsetlin bases.

Coefficients are obtained by orthogonal projection onto each basis element.
Alongside, every coefficient records the derivative-chain value

    t^{s,nu}_{k,mu}(g) = (1/k!) d_{t_2}^{k_2} d_{x_3}^{k_3-k_2} ... d_{x_m}^{k-k_{m-1}} g^nu |_{x=0}

where g = sum_nu g^nu e^{s,nu}. In the complex algebra of R^3 the two agree;
for m >= 4 the chain is not triangular with respect to this basis, and in the
real algebra it takes values in span{1, e_12}.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DomainError
from .ball import inner_value
from .bases import BasisLabel, blade_basis, blade_e, build_element, enumerate_J, labels_up_to
from .clifford import Multivector
from .mvpoly import MVPoly, dirac, partial_derivative
from .scalars import COMPLEX, Scalar, check_field, coerce, domain_of, imaginary_unit

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TaylorCoefficient:
    """
    One coefficient of the expansion.

    ``value`` is the projection (f, g) / (f, f); ``chain_value`` is the
    derivative-chain value for the same label.
    """

    label: BasisLabel
    value: Scalar
    chain_value: Multivector

    @property
    def chain_agrees(self) -> bool:
        """True when the derivative chain gives exactly ``value``."""
        return self.chain_value == Multivector.scalar(self.label.m, self.label.field, self.value)


@lru_cache(maxsize=256)
def _component_inverse(m: int, s: int, field: str) -> Tuple[Tuple, Tuple, Dict]:
    nus = tuple(enumerate_J(s, m))
    blades = tuple(blade_basis(m, s))
    row_of = {b: i for i, b in enumerate(blades)}
    rep: Dict[int, Dict[int, Scalar]] = {}
    for col, nu in enumerate(nus):
        for blade, value in blade_e(m, s, nu, field).terms.items():
            rep.setdefault(row_of[blade], {})[col] = value
    M = DomainMatrix(rep, (len(blades), len(nus)), domain_of(field))
    inverse = M.inv().to_sparse().rep
    return nus, blades, {i: dict(row) for i, row in inverse.items()}


def resolve_components(g: MVPoly, s: int, m: int, field: str) -> Dict[Tuple[int, ...], MVPoly]:
    """
    Scalar-valued g^nu with g = sum_nu g^nu e^{s,nu}.

    Raises:
        DomainError: If g is not s-vector valued.
    """
    if not g.is_grade_pure(s):
        raise DomainError(f"Polynomial is not {s}-vector valued: grades {g.grades()}")
    nus, blades, inverse = _component_inverse(m, s, field)
    components: Dict[Tuple[int, ...], Dict] = {nu: {} for nu in nus}
    for monomial, coeff in g.terms.items():
        for row, nu in enumerate(nus):
            value = domain_of(field).zero
            for col, weight in inverse.get(row, {}).items():
                c = coeff.terms.get(blades[col])
                if c:
                    value += weight * c
            if value:
                components[nu][monomial] = Multivector.scalar(m, field, value)
    return {nu: MVPoly(m, field, terms, _trusted=True) for nu, terms in components.items()}


def t2_derivative(p: MVPoly, t2: int) -> MVPoly:
    """
    The dimension-2 derivative: (1/2)(d_1 + i d_2) for t_2 = 1 and
    (1/2)(d_1 - i d_2) for t_2 = -1 in the complex algebra; (1/2)(d_1 + e_12 d_2)
    with left multiplication in the real algebra.
    """
    if t2 not in (-1, 1):
        raise DomainError(f"d_t2 is only defined for t_2 = +-1, got {t2}")
    d1, d2 = partial_derivative(p, 1), partial_derivative(p, 2)
    if p.field == COMPLEX:
        twisted = d2 * (t2 * imaginary_unit())
    else:
        twisted = Multivector.blade(p.dim, p.field, (1, 2)) * d2
    return (d1 + twisted) * QQ(1, 2)


def derivative_chain(p: MVPoly, label: BasisLabel) -> Multivector:
    """
    d_{t_2}^{k_2} d_{x_3}^{k_3-k_2} ... d_{x_m}^{k-k_{m-1}} p evaluated at 0.
    """
    degrees = label.degrees()
    for index in range(label.m - 2):
        axis = label.m - index
        for _ in range(degrees[index] - degrees[index + 1]):
            p = partial_derivative(p, axis)
    for _ in range(label.k2):
        p = t2_derivative(p, label.t2)
    return p.constant_term()


def _check_expandable(g: MVPoly, s: int, m: int, kmax: int, field: str) -> None:
    if g.dim != m or g.field != field:
        raise DomainError(f"Polynomial lives in ({g.dim}, {g.field}), expected ({m}, {field})")
    if not g.is_grade_pure(s):
        raise DomainError(f"Polynomial is not {s}-vector valued: grades {g.grades()}")
    if g.degree() > kmax:
        raise DomainError(f"Polynomial has degree {g.degree()} > {kmax}")
    if dirac(g):
        raise DomainError("Polynomial is not monogenic")


def taylor_coefficients(
    g: MVPoly, s: int, m: int, kmax: int, field: str
) -> List[TaylorCoefficient]:
    """
    Coefficients of g in the bases of H^s_k(R^m), k = 0..kmax, in label order.

    Args:
        g: Monogenic s-vector valued polynomial of degree at most kmax
        s: Grade
        m: Dimension
        kmax: Highest degree
        field: Coefficient field

    Raises:
        DomainError: If g is not an admissible polynomial.
    """
    check_field(field)
    _check_expandable(g, s, m, kmax, field)
    components = resolve_components(g, s, m, field)
    zero = MVPoly.zero(m, field)
    out = []
    for label in labels_up_to(s, m, kmax, field):
        scale = QQ(1, factorial(label.k))
        chain = derivative_chain(components.get(label.nu, zero), label).scale(scale)
        f = build_element(label).poly
        value = inner_value(f, g.homogeneous_part(label.k)) / inner_value(f, f)
        out.append(TaylorCoefficient(label, value, chain))
    mismatches = chain_mismatches(out)
    if mismatches and field == COMPLEX:
        log.warning(
            "derivative chain differs from projection on %d of %d labels (m=%d, s=%d)",
            mismatches,
            len(out),
            m,
            s,
        )
    log.debug("%d Taylor coefficients", len(out))
    return out


def chain_mismatches(coefficients: Sequence[TaylorCoefficient]) -> int:
    """Number of coefficients whose derivative-chain value differs from projection."""
    return sum(1 for c in coefficients if not c.chain_agrees)


def taylor_reconstruct(
    coeffs: Sequence, labels: Sequence[BasisLabel], m: int, field: str
) -> MVPoly:
    """
    sum_i coeffs[i] f_{labels[i]}; coefficients may be scalars or
    :class:`TaylorCoefficient` records.

    Raises:
        DomainError: On a length mismatch or a label of another dimension or
            field.
    """
    if len(coeffs) != len(labels):
        raise DomainError(f"{len(coeffs)} coefficients for {len(labels)} labels")
    result = MVPoly.zero(m, field)
    for coeff, label in zip(coeffs, labels):
        if label.m != m or label.field != field:
            raise DomainError(f"Label {label} does not belong to ({m}, {field})")
        value = coeff.value if isinstance(coeff, TaylorCoefficient) else coeff
        value = coerce(field, value)
        if value:
            result = result + build_element(label).poly * value
    return result
