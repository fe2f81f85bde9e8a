"""
Exact arithmetic in the Clifford algebras R_{0,m} and C_m.

Basis blades are canonical ascending index tuples, so e_{21} is stored as
``-1 * (1, 2)``. The defining relations are e_i e_j + e_j e_i = -2 delta_ij.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..exceptions import DomainError
from .scalars import Scalar, check_field, coerce, conjugate, domain_of, is_scalar_like

Blade = Tuple[int, ...]


def check_blade(indices: Iterable[int], m: int) -> Blade:
    """
    Validate a blade: strictly increasing indices in 1..m.

    Raises:
        DomainError: If an index is out of range or the order is not strict.
    """
    blade = tuple(int(i) for i in indices)
    for position, index in enumerate(blade):
        if not 1 <= index <= m:
            raise DomainError(f"Blade index {index} out of range 1..{m}")
        if position and blade[position - 1] >= index:
            raise DomainError(f"Blade {blade} is not strictly increasing")
    return blade


@lru_cache(maxsize=1 << 16)
def blade_product(a: Blade, b: Blade, m: int) -> Tuple[int, Blade]:
    """
    Geometric product of two basis blades.

    Returns ``(sign, blade)`` with e_a e_b = sign * e_blade.

    Example:
        >>> blade_product((2,), (1, 2), 3)
        (1, (1,))
    """
    check_blade(a, m)
    check_blade(b, m)
    swaps = sum(1 for i in a for j in b if j < i)
    common = set(a).intersection(b)
    sign = -1 if (swaps + len(common)) % 2 else 1
    return sign, tuple(sorted(set(a).symmetric_difference(b)))


def conjugation_sign(grade: int) -> int:
    """Sign (-1)^{s(s+1)/2} of the Clifford conjugate on s-vectors."""
    return -1 if (grade * (grade + 1) // 2) % 2 else 1


class Multivector:
    """
    Sparse element of the Clifford algebra of dimension ``dim``.

    Args:
        dim: Dimension m of the underlying Euclidean space (m >= 2)
        field: Coefficient field tag, ``"real"`` or ``"complex"``
        terms: Mapping from blades to scalars; zero scalars are pruned

    Example:
        >>> a = Multivector(3, "real", {(): 3, (1,): 2, (1, 2): 1})
        >>> a.grade_project(1)
        Multivector(3, 'real', {(1,): 2})
    """

    __slots__ = ("dim", "field", "terms")

    def __init__(
        self,
        dim: int,
        field: str,
        terms: Optional[Mapping[Iterable[int], Scalar]] = None,
        _trusted: bool = False,
    ):
        if dim < 2:
            raise DomainError(f"Clifford algebras need dimension >= 2, got {dim}")
        self.dim = dim
        self.field = check_field(field)
        if _trusted:
            self.terms: Dict[Blade, Scalar] = {b: c for b, c in terms.items() if c}
            return
        clean: Dict[Blade, Scalar] = {}
        for blade, coeff in (terms or {}).items():
            key = check_blade(blade, dim)
            value = coerce(field, coeff)
            if key in clean:
                value = clean[key] + value
            clean[key] = value
        self.terms = {b: c for b, c in clean.items() if c}

    # Construction helpers

    @classmethod
    def zero(cls, dim: int, field: str) -> "Multivector":
        return cls(dim, field)

    @classmethod
    def scalar(cls, dim: int, field: str, value=1) -> "Multivector":
        return cls(dim, field, {(): value})

    @classmethod
    def blade(cls, dim: int, field: str, indices: Iterable[int], coeff=1) -> "Multivector":
        return cls(dim, field, {tuple(indices): coeff})

    @classmethod
    def basis_vector(cls, dim: int, field: str, index: int, coeff=1) -> "Multivector":
        return cls(dim, field, {(index,): coeff})

    @property
    def domain(self):
        return domain_of(self.field)

    # Structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> List[int]:
        """Sorted list of the grades carrying nonzero coefficients."""
        return sorted({len(b) for b in self.terms})

    def grade(self) -> Optional[int]:
        """The grade when all stored blades share it, else None."""
        grades = self.grades()
        return grades[0] if len(grades) == 1 else None

    def is_grade_pure(self, s: int) -> bool:
        return all(len(b) == s for b in self.terms)

    def grade_project(self, s: int) -> "Multivector":
        return grade_project(self, s)

    def scalar_part(self) -> Scalar:
        return self.terms.get((), self.domain.zero)

    def conjugate(self) -> "Multivector":
        return clifford_conjugate(self)

    def scale(self, c) -> "Multivector":
        c = coerce(self.field, c)
        return Multivector(
            self.dim, self.field, {b: v * c for b, v in self.terms.items()}, _trusted=True
        )

    def sorted_terms(self) -> List[Tuple[Blade, Scalar]]:
        """Terms ordered by grade, then lexicographically by blade."""
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    # Arithmetic

    def _check_compatible(self, other: "Multivector") -> None:
        if self.dim != other.dim or self.field != other.field:
            raise DomainError(
                f"Multivector mismatch: ({self.dim}, {self.field}) vs "
                f"({other.dim}, {other.field})"
            )

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for blade, coeff in other.terms.items():
            terms[blade] = terms[blade] + coeff if blade in terms else coeff
        return Multivector(self.dim, self.field, terms, _trusted=True)

    def __neg__(self) -> "Multivector":
        return Multivector(
            self.dim, self.field, {b: -c for b, c in self.terms.items()}, _trusted=True
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            return mv_geometric_product(self, other)
        if not is_scalar_like(other):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other) -> "Multivector":
        if not is_scalar_like(other):
            return NotImplemented
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.field, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{b}: {c}" for b, c in self.sorted_terms())
        return f"Multivector({self.dim}, {self.field!r}, {{{body}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for blade, coeff in self.sorted_terms():
            name = "e" + "".join(str(i) for i in blade) if blade else ""
            parts.append(f"({coeff}){'*' + name if name else ''}")
        return " + ".join(parts)


def mv_geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """
    Bilinear extension of :func:`blade_product`.

    Raises:
        DomainError: If dimensions or fields differ.
    """
    a._check_compatible(b)
    terms: Dict[Blade, Scalar] = {}
    m = a.dim
    for blade_a, coeff_a in a.terms.items():
        for blade_b, coeff_b in b.terms.items():
            sign, blade = blade_product(blade_a, blade_b, m)
            value = coeff_a * coeff_b if sign > 0 else -(coeff_a * coeff_b)
            terms[blade] = terms[blade] + value if blade in terms else value
    return Multivector(m, a.field, terms, _trusted=True)


def grade_project(a: Multivector, s: int) -> Multivector:
    """
    Keep exactly the blades of cardinality ``s``.

    Raises:
        DomainError: If ``s`` is outside 0..dim.
    """
    if not 0 <= s <= a.dim:
        raise DomainError(f"Grade {s} out of range 0..{a.dim}")
    return Multivector(
        a.dim, a.field, {b: c for b, c in a.terms.items() if len(b) == s}, _trusted=True
    )


def _require_vector(u: Multivector) -> None:
    if any(len(b) != 1 for b in u.terms):
        raise DomainError(f"Expected a 1-vector, got grades {u.grades()}")


def _split_by_vector(u: Multivector, v: Multivector, keep_inner: bool) -> Multivector:
    # e_i ^ e_B = e_i e_B when i is not in B, e_i . e_B = e_i e_B when it is.
    _require_vector(u)
    u._check_compatible(v)
    m = u.dim
    terms: Dict[Blade, Scalar] = {}
    for (i,), coeff_u in u.terms.items():
        for blade, coeff_v in v.terms.items():
            if (i in blade) != keep_inner:
                continue
            sign, result = blade_product((i,), blade, m)
            value = coeff_u * coeff_v if sign > 0 else -(coeff_u * coeff_v)
            terms[result] = terms[result] + value if result in terms else value
    return Multivector(m, u.field, terms, _trusted=True)


def wedge_by_vector(u: Multivector, v: Multivector) -> Multivector:
    """
    Outer product u ^ v of a 1-vector with an arbitrary multivector.

    On each grade-s part v_s this equals (u v_s + (-1)^s v_s u) / 2 and raises
    the grade by one.

    Raises:
        DomainError: If ``u`` is not a 1-vector.
    """
    return _split_by_vector(u, v, keep_inner=False)


def dot_by_vector(u: Multivector, v: Multivector) -> Multivector:
    """
    Inner product u . v of a 1-vector with an arbitrary multivector.

    On each grade-s part v_s this equals (u v_s - (-1)^s v_s u) / 2 and lowers
    the grade by one.

    Raises:
        DomainError: If ``u`` is not a 1-vector.
    """
    return _split_by_vector(u, v, keep_inner=True)


def clifford_conjugate(a: Multivector) -> Multivector:
    """
    Clifford conjugate: (-1)^{s(s+1)/2} on s-blades; in C_m the scalar
    coefficients are complex conjugated as well.
    """
    terms = {}
    for blade, coeff in a.terms.items():
        value = conjugate(a.field, coeff)
        terms[blade] = value if conjugation_sign(len(blade)) > 0 else -value
    return Multivector(a.dim, a.field, terms, _trusted=True)


def scalar_product(a: Multivector, b: Multivector) -> Scalar:
    """
    The scalar part [conj(a) b]_0.

    conj(e_B) e_B = 1 for every blade and mixed blades have no scalar part, so
    this is the Hermitian dot product of the coefficient vectors.
    """
    a._check_compatible(b)
    total = a.domain.zero
    for blade, coeff in a.terms.items():
        other = b.terms.get(blade)
        if other is not None:
            total += conjugate(a.field, coeff) * other
    return total


def pseudoscalar_reversed(dim: int, field: str) -> Multivector:
    """The element e_m e_{m-1} ... e_1 spanning the top grade."""
    result = Multivector.scalar(dim, field)
    for index in range(dim, 0, -1):
        result = result * Multivector.basis_vector(dim, field, index)
    return result
