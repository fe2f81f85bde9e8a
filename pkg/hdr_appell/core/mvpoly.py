"""
Multivector-valued polynomials on R^m and the differential operators acting
on them: the Dirac operator and its split into d+ and d-, the outer and inner
multiplication by x, the Laplacian, the Euler operator and the H-action of
generator reflections.
"""

from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import DomainError
from .clifford import (
    Blade,
    Multivector,
    blade_product,
    dot_by_vector,
    wedge_by_vector,
)
from .scalars import Scalar, check_field, coerce, domain_of

Monomial = Tuple[int, ...]


def _check_monomial(exponents: Iterable[int], dim: int) -> Monomial:
    monomial = tuple(int(a) for a in exponents)
    if len(monomial) != dim or any(a < 0 for a in monomial):
        raise DomainError(f"Monomial {monomial} is not a valid exponent vector in R^{dim}")
    return monomial


def _check_axis(i: int, dim: int) -> None:
    if not 1 <= i <= dim:
        raise DomainError(f"Axis {i} out of range 1..{dim}")


@lru_cache(maxsize=1024)
def _basis_vector(dim: int, field: str, j: int) -> Multivector:
    return Multivector.basis_vector(dim, field, j)


class MVPoly:
    """
    Sparse polynomial R^m -> Clifford algebra, stored as monomial -> Multivector.

    Args:
        dim: Ambient dimension m
        field: Coefficient field tag
        terms: Mapping from exponent vectors to Multivectors of the same
            dimension and field; zero coefficients are pruned

    Example:
        >>> x1 = MVPoly.variable(2, "real", 1)
        >>> e12 = Multivector.blade(2, "real", (1, 2))
        >>> z = x1 - e12 * MVPoly.variable(2, "real", 2)
        >>> (z * z).degree()
        2
    """

    __slots__ = ("dim", "field", "terms")

    def __init__(
        self,
        dim: int,
        field: str,
        terms: Optional[Mapping[Iterable[int], Multivector]] = None,
        _trusted: bool = False,
    ):
        self.dim = dim
        self.field = check_field(field)
        if _trusted:
            self.terms: Dict[Monomial, Multivector] = {
                a: c for a, c in terms.items() if c
            }
            return
        clean: Dict[Monomial, Multivector] = {}
        for exponents, coeff in (terms or {}).items():
            key = _check_monomial(exponents, dim)
            if coeff.dim != dim or coeff.field != field:
                raise DomainError(
                    f"Coefficient of {key} lives in ({coeff.dim}, {coeff.field}), "
                    f"expected ({dim}, {field})"
                )
            clean[key] = clean[key] + coeff if key in clean else coeff
        self.terms = {a: c for a, c in clean.items() if c}

    # Construction helpers

    @classmethod
    def zero(cls, dim: int, field: str) -> "MVPoly":
        return cls(dim, field)

    @classmethod
    def constant(cls, value: Multivector) -> "MVPoly":
        return cls(value.dim, value.field, {(0,) * value.dim: value})

    @classmethod
    def scalar(cls, dim: int, field: str, value=1) -> "MVPoly":
        return cls.constant(Multivector.scalar(dim, field, value))

    @classmethod
    def monomial(
        cls, dim: int, field: str, exponents: Iterable[int], value: Optional[Multivector] = None
    ) -> "MVPoly":
        coeff = value if value is not None else Multivector.scalar(dim, field)
        return cls(dim, field, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, dim: int, field: str, i: int, coeff=1) -> "MVPoly":
        """The scalar coordinate function x_i."""
        _check_axis(i, dim)
        exponents = [0] * dim
        exponents[i - 1] = 1
        return cls.monomial(dim, field, exponents, Multivector.scalar(dim, field, coeff))

    @classmethod
    def vector_variable(cls, dim: int, field: str, restricted: bool = False) -> "MVPoly":
        """x = x_1 e_1 + ... + x_m e_m, or its first m-1 terms when restricted."""
        last = dim - 1 if restricted else dim
        terms = {}
        for j in range(1, last + 1):
            exponents = [0] * dim
            exponents[j - 1] = 1
            terms[tuple(exponents)] = _basis_vector(dim, field, j)
        return cls(dim, field, terms)

    @classmethod
    def from_coordinates(
        cls, dim: int, field: str, items: Iterable[Tuple[Monomial, Blade, Scalar]]
    ) -> "MVPoly":
        flat: Dict[Tuple[Monomial, Blade], Scalar] = {}
        for monomial, blade, value in items:
            key = (tuple(monomial), tuple(blade))
            flat[key] = flat[key] + value if key in flat else value
        return _from_flat(dim, field, flat)

    @property
    def domain(self):
        return domain_of(self.field)

    # Structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def is_homogeneous(self, k: int) -> bool:
        return all(sum(a) == k for a in self.terms)

    def homogeneous_part(self, k: int) -> "MVPoly":
        return MVPoly(
            self.dim,
            self.field,
            {a: c for a, c in self.terms.items() if sum(a) == k},
            _trusted=True,
        )

    def grades(self) -> List[int]:
        return sorted({len(b) for c in self.terms.values() for b in c.terms})

    def is_grade_pure(self, s: int) -> bool:
        return all(c.is_grade_pure(s) for c in self.terms.values())

    def coefficient(self, exponents: Iterable[int]) -> Multivector:
        key = tuple(exponents)
        return self.terms.get(key, Multivector.zero(self.dim, self.field))

    def constant_term(self) -> Multivector:
        return self.coefficient((0,) * self.dim)

    def coordinates(self) -> Iterator[Tuple[Monomial, Blade, Scalar]]:
        """(monomial, blade, scalar) triples in deterministic order."""
        for monomial in sorted(self.terms):
            for blade, value in self.terms[monomial].sorted_terms():
                yield monomial, blade, value

    def map_coefficients(self, fn) -> "MVPoly":
        return MVPoly(
            self.dim, self.field, {a: fn(c) for a, c in self.terms.items()}, _trusted=True
        )

    def lift(self, m: int) -> "MVPoly":
        return lift(self, m)

    # Arithmetic

    def _check_compatible(self, other: "MVPoly") -> None:
        if self.dim != other.dim or self.field != other.field:
            raise DomainError(
                f"Polynomial mismatch: ({self.dim}, {self.field}) vs "
                f"({other.dim}, {other.field})"
            )

    def __add__(self, other: "MVPoly") -> "MVPoly":
        if not isinstance(other, MVPoly):
            return NotImplemented
        return poly_add(self, other)

    def __neg__(self) -> "MVPoly":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: "MVPoly") -> "MVPoly":
        if not isinstance(other, MVPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __mul__(self, other) -> "MVPoly":
        if isinstance(other, MVPoly):
            return poly_mul(self, other)
        if isinstance(other, Multivector):
            return poly_mul(self, MVPoly.constant(other))
        return poly_scale(self, other)

    def __rmul__(self, other) -> "MVPoly":
        if isinstance(other, Multivector):
            return poly_mul(MVPoly.constant(other), self)
        return poly_scale(self, other)

    def __pow__(self, n: int) -> "MVPoly":
        if n < 0:
            raise DomainError("Negative powers are not polynomials")
        result = MVPoly.scalar(self.dim, self.field)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MVPoly):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {self.terms[a]!r}" for a in sorted(self.terms))
        return f"MVPoly({self.dim}, {self.field!r}, {{{body}}})"


def _from_flat(dim: int, field: str, flat: Mapping[Tuple[Monomial, Blade], Scalar]) -> MVPoly:
    grouped: Dict[Monomial, Dict[Blade, Scalar]] = {}
    for (monomial, blade), value in flat.items():
        if value:
            grouped.setdefault(monomial, {})[blade] = value
    return MVPoly(
        dim,
        field,
        {a: Multivector(dim, field, t, _trusted=True) for a, t in grouped.items()},
        _trusted=True,
    )


def poly_add(p: MVPoly, q: MVPoly) -> MVPoly:
    p._check_compatible(q)
    terms = dict(p.terms)
    for monomial, coeff in q.terms.items():
        terms[monomial] = terms[monomial] + coeff if monomial in terms else coeff
    return MVPoly(p.dim, p.field, terms, _trusted=True)


def poly_scale(p: MVPoly, c) -> MVPoly:
    c = coerce(p.field, c)
    return p.map_coefficients(lambda mv: mv.scale(c))


def poly_mul(p: MVPoly, q: MVPoly) -> MVPoly:
    """
    Product of two polynomials; coefficients multiply by the geometric
    product, so the result depends on the order of the factors.
    """
    p._check_compatible(q)
    m = p.dim
    flat: Dict[Tuple[Monomial, Blade], Scalar] = {}
    for mono_p, coeff_p in p.terms.items():
        for mono_q, coeff_q in q.terms.items():
            monomial = tuple(a + b for a, b in zip(mono_p, mono_q))
            for blade_p, value_p in coeff_p.terms.items():
                for blade_q, value_q in coeff_q.terms.items():
                    sign, blade = blade_product(blade_p, blade_q, m)
                    value = value_p * value_q if sign > 0 else -(value_p * value_q)
                    key = (monomial, blade)
                    flat[key] = flat[key] + value if key in flat else value
    return _from_flat(m, p.field, flat)


def lift(p: MVPoly, m: int) -> MVPoly:
    """
    View a polynomial on R^{m'} (m' <= m) with values in the smaller algebra
    as a polynomial on R^m that does not depend on the extra coordinates.
    """
    if m < p.dim:
        raise DomainError(f"Cannot lift a polynomial on R^{p.dim} to R^{m}")
    if m == p.dim:
        return p
    padding = (0,) * (m - p.dim)
    return MVPoly(
        m,
        p.field,
        {a + padding: Multivector(m, p.field, c.terms, _trusted=True) for a, c in p.terms.items()},
        _trusted=True,
    )


def partial_derivative(p: MVPoly, i: int) -> MVPoly:
    """
    Formal partial derivative with respect to x_i.

    Raises:
        DomainError: If the axis is out of range.
    """
    _check_axis(i, p.dim)
    terms = {}
    for monomial, coeff in p.terms.items():
        power = monomial[i - 1]
        if power:
            lowered = monomial[: i - 1] + (power - 1,) + monomial[i:]
            terms[lowered] = coeff.scale(power)
    return MVPoly(p.dim, p.field, terms, _trusted=True)


def _apply_left(p: MVPoly, op) -> MVPoly:
    return MVPoly(p.dim, p.field, {a: op(c) for a, c in p.terms.items()}, _trusted=True)


def _vector_sum(p: MVPoly, coefficient_op, axes: int) -> MVPoly:
    result = MVPoly.zero(p.dim, p.field)
    for j in range(1, axes + 1):
        derivative = partial_derivative(p, j)
        if derivative:
            e_j = _basis_vector(p.dim, p.field, j)
            result = result + _apply_left(derivative, lambda c: coefficient_op(e_j, c))
    return result


def dirac(p: MVPoly) -> MVPoly:
    """The Dirac operator e_1 d/dx_1 + ... + e_m d/dx_m (left multiplication)."""
    return _vector_sum(p, lambda e, c: e * c, p.dim)


def dirac_plus(p: MVPoly) -> MVPoly:
    """d+ P = sum_j e_j ^ (d/dx_j P); raises the value grade by one."""
    return _vector_sum(p, wedge_by_vector, p.dim)


def dirac_minus(p: MVPoly) -> MVPoly:
    """d- P = sum_j e_j . (d/dx_j P); lowers the value grade by one."""
    return _vector_sum(p, dot_by_vector, p.dim)


def _times_coordinate(p: MVPoly, j: int) -> MVPoly:
    terms = {}
    for monomial, coeff in p.terms.items():
        terms[monomial[: j - 1] + (monomial[j - 1] + 1,) + monomial[j:]] = coeff
    return MVPoly(p.dim, p.field, terms, _trusted=True)


def _x_operator(p: MVPoly, coefficient_op, restricted: bool) -> MVPoly:
    result = MVPoly.zero(p.dim, p.field)
    last = p.dim - 1 if restricted else p.dim
    for j in range(1, last + 1):
        e_j = _basis_vector(p.dim, p.field, j)
        image = _apply_left(p, lambda c: coefficient_op(e_j, c))
        if image:
            result = result + _times_coordinate(image, j)
    return result


def x_wedge(p: MVPoly, restricted: bool = False) -> MVPoly:
    """
    Outer multiplication (x ^ P) = sum_j x_j e_j ^ P.

    With ``restricted`` only the first m-1 axes take part, which gives the
    operator (x' ^) used by the embedding factors.
    """
    return _x_operator(p, wedge_by_vector, restricted)


def x_dot(p: MVPoly, restricted: bool = False) -> MVPoly:
    """Inner multiplication (x . P) = sum_j x_j e_j . P; see :func:`x_wedge`."""
    return _x_operator(p, dot_by_vector, restricted)


def laplacian(p: MVPoly) -> MVPoly:
    result = MVPoly.zero(p.dim, p.field)
    for j in range(1, p.dim + 1):
        result = result + partial_derivative(partial_derivative(p, j), j)
    return result


def euler(p: MVPoly) -> MVPoly:
    """Euler degree operator sum_j x_j d/dx_j."""
    result = MVPoly.zero(p.dim, p.field)
    for j in range(1, p.dim + 1):
        result = result + _times_coordinate(partial_derivative(p, j), j)
    return result


def h_action_generator(i: int, p: MVPoly) -> MVPoly:
    """
    H-action of the reflection e_i: x -> e_i f(e_i^{-1} x e_i) e_i^{-1}.

    The substitution negates every coordinate except x_i; the values are
    conjugated by e_i.

    Raises:
        DomainError: If the axis is out of range.
    """
    _check_axis(i, p.dim)
    e_i = _basis_vector(p.dim, p.field, i)
    terms = {}
    for monomial, coeff in p.terms.items():
        flips = sum(a for j, a in enumerate(monomial, start=1) if j != i)
        value = -(e_i * coeff * e_i)
        terms[monomial] = -value if flips % 2 else value
    return MVPoly(p.dim, p.field, terms, _trusted=True)


def evaluate(p: MVPoly, point: Sequence) -> Multivector:
    """
    Exact value of ``p`` at ``point``.

    Raises:
        DomainError: If the point does not have m coordinates.
    """
    if len(point) != p.dim:
        raise DomainError(f"Point has {len(point)} coordinates, expected {p.dim}")
    values = [coerce(p.field, v) for v in point]
    K = p.domain
    result = Multivector.zero(p.dim, p.field)
    for monomial, coeff in p.terms.items():
        weight = K.one
        for value, power in zip(values, monomial):
            weight *= value**power
        result = result + coeff.scale(weight)
    return result


def monomials_of_degree(dim: int, k: int) -> List[Monomial]:
    """All exponent vectors of total degree k in ``dim`` variables, sorted."""
    if k < 0:
        return []
    out: List[Monomial] = []

    def extend(prefix: Tuple[int, ...], remaining: int) -> None:
        if len(prefix) == dim - 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            extend(prefix + (a,), remaining - a)

    extend((), k)
    return sorted(out)


def restrict_last(p: MVPoly) -> MVPoly:
    """
    Set x_m = 0 and view the result as a polynomial on R^{m-1}.

    Raises:
        DomainError: If a surviving coefficient involves e_m.
    """
    m = p.dim
    terms = {}
    for monomial, coeff in p.terms.items():
        if monomial[-1]:
            continue
        if any(m in blade for blade in coeff.terms):
            raise DomainError(f"Coefficient {coeff!r} involves e_{m}")
        terms[monomial[:-1]] = Multivector(m - 1, p.field, coeff.terms, _trusted=True)
    return MVPoly(m - 1, p.field, terms, _trusted=True)
