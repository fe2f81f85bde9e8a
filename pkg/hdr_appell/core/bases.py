"""
Index sets and Gelfand-Tsetlin bases.

Labels follow the chain R^m > R^{m-1} > ... > R^2: nu = (s_{m-1}, ..., s_3, t_2)
records the grades and mu = (k_{m-1}, ..., k_2) the degrees along the chain.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from ..exceptions import DomainError, InvariantError
from .clifford import Multivector
from .factors import apply_gmt_factor, apply_hdr_factor, factor_F, is_branch_pair, make_hdr_factor_spec
from .mvpoly import MVPoly, lift
from .scalars import COMPLEX, REAL, check_field, imaginary_unit

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchPair:
    t: int
    j: int


@dataclass(frozen=True, order=True)
class BasisLabel:
    """
    Identifies the basis element f^{s,nu}_{k,mu} of H^s_k(R^m).

    Example:
        >>> label = BasisLabel(3, "real", 1, 2, (1,), (1,))
        >>> label.lower().k
        1
    """

    m: int
    field: str
    s: int
    k: int
    nu: Tuple[int, ...]
    mu: Tuple[int, ...]

    def __post_init__(self):
        check_field(self.field)
        if self.m < 3:
            raise DomainError(f"Basis labels need m >= 3, got {self.m}")
        if len(self.nu) != self.m - 2 or len(self.mu) != self.m - 2:
            raise DomainError(f"nu and mu need {self.m - 2} entries, got {self.nu}, {self.mu}")

    @property
    def t2(self) -> int:
        return self.nu[-1]

    @property
    def k2(self) -> int:
        return self.mu[-1]

    @property
    def top_pair(self) -> BranchPair:
        """(s_{m-1}, k_{m-1}) as a pair of N^{s,m}_k."""
        t = abs(self.nu[0]) if self.m == 3 else self.nu[0]
        return BranchPair(t, self.mu[0])

    def grades(self) -> Tuple[int, ...]:
        """(s_m, s_{m-1}, ..., s_2)."""
        return (self.s,) + self.nu[:-1] + (abs(self.t2),)

    def degrees(self) -> Tuple[int, ...]:
        """(k_m, k_{m-1}, ..., k_2)."""
        return (self.k,) + self.mu

    def tail(self) -> "BasisLabel":
        """Label of the seed in R^{m-1}; only for m >= 4."""
        if self.m == 3:
            raise DomainError("The seed of a label in R^3 is a dimension-2 base case")
        return BasisLabel(self.m - 1, self.field, self.nu[0], self.mu[0], self.nu[1:], self.mu[1:])

    def lower(self) -> "BasisLabel":
        """The same chain with k replaced by k - 1."""
        return BasisLabel(self.m, self.field, self.s, self.k - 1, self.nu, self.mu)

    def sort_key(self) -> Tuple:
        return (self.nu, self.mu)


@dataclass(frozen=True)
class GTBasisElement:
    label: BasisLabel
    poly: MVPoly


@dataclass(frozen=True)
class GMTBasisElement:
    """
    An element of the generalized Moisil-Theodoresco basis.

    ``lifted`` marks elements ((x ^) + beta (x .)) f built from the label of
    degree k-1; otherwise ``poly`` is the Hodge-de Rham element of ``label``.
    """

    label: BasisLabel
    lifted: bool
    poly: MVPoly


def _check_m(m: int, minimum: int = 3) -> None:
    if m < minimum:
        raise DomainError(f"Dimension must be at least {minimum}, got {m}")


def _check_grade(s: int, m: int) -> None:
    if not 0 <= s <= m:
        raise DomainError(f"Grade {s} out of range 0..{m}")


def _check_degree(k: int) -> None:
    if k < 0:
        raise DomainError(f"Degree must be nonnegative, got {k}")


def enumerate_N(s: int, m: int, k: int) -> List[BranchPair]:
    """
    The branching set N^{s,m}_k ordered by t, then j.

    Example:
        >>> [(p.t, p.j) for p in enumerate_N(1, 3, 2)]
        [(0, 0), (1, 0), (1, 1), (1, 2)]
    """
    _check_m(m)
    _check_grade(s, m)
    _check_degree(k)
    return [
        BranchPair(t, j)
        for t in (s - 1, s)
        for j in range(k + 1)
        if is_branch_pair(s, m, k, t, j)
    ]


def is_trivial(s: int, m: int, k: int) -> bool:
    """H^s_k(R^m) = {0} for s in {0, m} and k >= 1."""
    return s in (0, m) and k >= 1


def _dim2_chains(s: int, k: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if s == 1:
        return [((-1,), (k,)), ((1,), (k,))]
    if s in (0, 2) and k == 0:
        return [((s,), (0,))]
    return []


@lru_cache(maxsize=4096)
def _chains(s: int, r: int, k: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    if r == 2:
        return tuple(_dim2_chains(s, k))
    out = []
    for pair in enumerate_N(s, r, k):
        for nu, mu in _chains(pair.t, r - 1, pair.j):
            if r == 3:
                out.append((nu, mu))
            else:
                out.append(((pair.t,) + nu, (pair.j,) + mu))
    return tuple(out)


def enumerate_I(s: int, m: int, k: int, field: str = REAL) -> List[BasisLabel]:
    """
    The label set I^{s,m}_k in lexicographic order on (nu, mu).

    Empty for s in {0, m} and k >= 1.

    Example:
        >>> len(enumerate_I(1, 3, 2))
        7
    """
    _check_m(m)
    _check_grade(s, m)
    _check_degree(k)
    check_field(field)
    if is_trivial(s, m, k):
        return []
    labels = [BasisLabel(m, field, s, k, nu, mu) for nu, mu in _chains(s, m, k)]
    return sorted(labels, key=BasisLabel.sort_key)


@lru_cache(maxsize=4096)
def _count(s: int, r: int, k: int) -> int:
    if r == 2:
        return len(_dim2_chains(s, k))
    return sum(_count(pair.t, r - 1, pair.j) for pair in enumerate_N(s, r, k))


def count_I(s: int, m: int, k: int) -> int:
    """|I^{s,m}_k| from the branching recursion, without building labels."""
    _check_m(m, minimum=2)
    _check_grade(s, m)
    _check_degree(k)
    if is_trivial(s, m, k):
        return 0
    return _count(s, m, k)


def validate_label(label: BasisLabel) -> BasisLabel:
    """
    Check that every link of the chain is a branching pair.

    Raises:
        DomainError: If the label is not in I^{s,m}_k.
    """
    grades, degrees = label.grades(), label.degrees()
    _check_grade(label.s, label.m)
    if is_trivial(label.s, label.m, label.k):
        raise DomainError(f"H^{label.s}_{label.k}(R^{label.m}) is trivial")
    for index in range(label.m - 2):
        r = label.m - index
        if not is_branch_pair(grades[index], r, degrees[index], grades[index + 1], degrees[index + 1]):
            raise DomainError(f"Label {label} breaks the branching rule in R^{r}")
    if (label.t2, label.k2) not in ((0, 0), (2, 0)) and label.t2 not in (-1, 1):
        raise DomainError(f"Inadmissible dimension-2 pair ({label.t2}, {label.k2})")
    return label


def enumerate_J(s: int, m: int) -> List[Tuple[int, ...]]:
    """
    The sequences nu = (s_{m-1}, ..., s_3, t_2) indexing the blade basis
    e^{s,nu} of the s-vectors, in lexicographic order.
    """
    _check_m(m)
    _check_grade(s, m)

    def descend(grade: int, r: int) -> List[Tuple[int, ...]]:
        if r == 2:
            return [(-1,), (1,)] if grade == 1 else [(grade,)]
        out = []
        for lower in (grade - 1, grade):
            if 0 <= lower <= r - 1:
                for rest in descend(lower, r - 1):
                    out.append(rest if r == 3 else (lower,) + rest)
        return out

    return sorted(descend(s, m))


@lru_cache(maxsize=16)
def _seed_vector(t2: int, field: str) -> Multivector:
    if t2 == 0:
        return Multivector.scalar(2, field)
    if t2 == 2:
        return Multivector.blade(2, field, (1, 2), -1)
    if t2 not in (-1, 1):
        raise DomainError(f"t_2 must be one of -1, 0, 1, 2, got {t2}")
    if field == COMPLEX:
        e1 = Multivector.basis_vector(2, field, 1)
        e2 = Multivector.basis_vector(2, field, 2)
        i = imaginary_unit()
        return e1 - e2.scale(i) if t2 == 1 else e1 + e2.scale(i)
    return Multivector.basis_vector(2, field, 1 if t2 == 1 else 2)


def blade_e(m: int, s: int, nu: Sequence[int], field: str = REAL) -> Multivector:
    """
    e^{s,nu} = e_m^{s-s_{m-1}} ... e_3^{s_3-s_2} e^{s_2,t_2}.

    Example:
        >>> blade_e(3, 1, (1,))
        Multivector(3, 'real', {(1,): 1})
    """
    _check_m(m)
    _check_grade(s, m)
    nu = tuple(nu)
    if len(nu) != m - 2:
        raise DomainError(f"nu needs {m - 2} entries, got {nu}")
    grades = (s,) + nu[:-1] + (abs(nu[-1]),)
    seed = _seed_vector(nu[-1], field)
    result = Multivector(m, field, seed.terms, _trusted=True)
    for index in range(m - 2, 0, -1):
        r = m - index + 1
        step = grades[index - 1] - grades[index]
        if step not in (0, 1):
            raise DomainError(f"nu = {nu} is not in J^{{{s},{m}}}")
        if step:
            result = Multivector.basis_vector(m, field, r) * result
    return result


def base_case_dim2(t2: int, k2: int, field: str = REAL) -> MVPoly:
    """
    Basis elements of the Hodge-de Rham spaces in R^2.

    Real algebra: f^{+-1}_k = (x_1 - e_12 x_2)^k e^{1,+-1} with e^{1,1} = e_1 and
    e^{1,-1} = e_2. Complex algebra: f^{+-1}_k = (x_1 -+ i x_2)^k (e_1 -+ i e_2).
    The constants are f^0_0 = 1 and f^2_0 = e_21.

    Raises:
        DomainError: If (t2, k2) is not admissible.
    """
    check_field(field)
    if t2 in (0, 2):
        if k2 != 0:
            raise DomainError(f"Grade {t2} in R^2 only has constant solutions, got k2={k2}")
        return MVPoly.constant(_seed_vector(t2, field))
    if t2 not in (-1, 1) or k2 < 0:
        raise DomainError(f"Inadmissible dimension-2 pair ({t2}, {k2})")
    x1 = MVPoly.variable(2, field, 1)
    if field == COMPLEX:
        z = x1 + MVPoly.variable(2, field, 2, -t2 * imaginary_unit())
    else:
        z = x1 - Multivector.blade(2, field, (1, 2)) * MVPoly.variable(2, field, 2)
    return z**k2 * _seed_vector(t2, field)


@lru_cache(maxsize=4096)
def build_element(label: BasisLabel) -> GTBasisElement:
    """
    Compose the embedding factors down the chain R^m > ... > R^3 onto the
    dimension-2 base case.

    Raises:
        DomainError: If the label is not in I^{s,m}_k.
        InvariantError: If the composed polynomial is not grade pure.
    """
    validate_label(label)
    if label.m == 3:
        seed = base_case_dim2(label.t2, label.k2, label.field)
    else:
        seed = build_element(label.tail()).poly
    pair = label.top_pair
    spec = make_hdr_factor_spec(label.m, label.s, pair.t, label.k, pair.j)
    poly = apply_hdr_factor(spec, seed)
    if not poly.is_grade_pure(label.s) or not poly.is_homogeneous(label.k):
        raise InvariantError(
            f"Element {label} has grades {poly.grades()} and degree {poly.degree()}",
            detail=poly,
        )
    return GTBasisElement(label, poly)


def hdr_basis(s: int, m: int, k: int, field: str = REAL) -> List[GTBasisElement]:
    """
    The Gelfand-Tsetlin basis of H^s_k(R^m).

    Example:
        >>> len(hdr_basis(1, 3, 1))
        5
    """
    labels = enumerate_I(s, m, k, field)
    log.debug("Building %d elements of H^%d_%d(R^%d, %s)", len(labels), s, k, m, field)
    return [build_element(label) for label in labels]


def dim2_basis(t: int, j: int, field: str = REAL) -> List[MVPoly]:
    """Basis of H^t_j(R^2) in the order of the labels (t_2 ascending)."""
    return [base_case_dim2(nu[0], mu[0], field) for nu, mu in _dim2_chains(t, j)]


def shifted_grades(grades: Iterable[int]) -> List[int]:
    """S' = {s : s - 1 and s + 1 are both in S}."""
    S = set(grades)
    return sorted(s for s in {g + 1 for g in S} if s - 1 in S and s + 1 in S)


def gmt_basis(grades: Iterable[int], m: int, k: int, field: str = REAL) -> List[GMTBasisElement]:
    """
    Orthogonal basis of the k-homogeneous monogenic polynomials with values
    in the grades S: the Hodge-de Rham bases for s in S followed by
    ((x ^) + beta^{s,m}_{k-1} (x .)) f for f in H^s_{k-1}, s in S'.

    Raises:
        DomainError: If a grade lies outside 0..m.
    """
    _check_m(m)
    _check_degree(k)
    S = sorted(set(grades))
    for s in S:
        _check_grade(s, m)
    out = [
        GMTBasisElement(element.label, False, element.poly)
        for s in S
        for element in hdr_basis(s, m, k, field)
    ]
    if k >= 1:
        for s in shifted_grades(S):
            for element in hdr_basis(s, m, k - 1, field):
                poly = apply_gmt_factor(s, m, k, element.poly, check=False)
                out.append(GMTBasisElement(element.label, True, poly))
    log.debug("GMT basis for S=%s, m=%d, k=%d has %d elements", S, m, k, len(out))
    return out


def harmonic_labels(m: int, k: int) -> List[Tuple[int, ...]]:
    """
    Sequences mu = (k_{m-1}, ..., k_3, +-k_2) with k >= k_{m-1} >= ... >= k_2 >= 0.

    The sign on k_2 selects (x_1 - i x_2)^{k_2} for + and (x_1 + i x_2)^{k_2}
    for -.
    """
    _check_m(m, minimum=2)
    _check_degree(k)

    def descend(top: int, length: int) -> List[Tuple[int, ...]]:
        if length == 0:
            return [()]
        return [(j,) + rest for j in range(top + 1) for rest in descend(j, length - 1)]

    out = []
    for mu in descend(k, m - 2) if m > 2 else [(k,)]:
        k2 = mu[-1]
        if k2 == 0:
            out.append(mu)
        else:
            out.append(mu[:-1] + (k2,))
            out.append(mu[:-1] + (-k2,))
    return sorted(out)


def harmonic_element(m: int, k: int, mu: Sequence[int]) -> MVPoly:
    """h_{k,mu} = (x_1 -+ i x_2)^{k_2} prod_{r=3}^m F^{(k_r - k_{r-1})}_{r,k_{r-1}}."""
    signed_k2 = mu[-1]
    k2 = abs(signed_k2)
    x1 = MVPoly.variable(m, COMPLEX, 1)
    sign = -1 if signed_k2 >= 0 else 1
    poly = (x1 + MVPoly.variable(m, COMPLEX, 2, sign * imaginary_unit())) ** k2
    degrees = (k,) + tuple(mu[:-1]) + (k2,)
    for index in range(len(degrees) - 1):
        r = m - index
        poly = lift(factor_F(r, degrees[index], degrees[index + 1], COMPLEX), m) * poly
    return poly


def harmonic_basis(m: int, k: int, field: str = COMPLEX) -> List[MVPoly]:
    """
    Orthogonal basis of the k-homogeneous complex harmonic polynomials on R^m,
    in the order of :func:`harmonic_labels`.

    Raises:
        DomainError: If m < 3 or the real field is requested.
    """
    _check_m(m)
    if check_field(field) != COMPLEX:
        raise DomainError("The harmonic basis is complex valued; use field='complex'")
    return [harmonic_element(m, k, mu) for mu in harmonic_labels(m, k)]


def blade_basis(m: int, s: int) -> List[Tuple[int, ...]]:
    """All s-blades of R^m in lexicographic order."""
    return list(combinations(range(1, m + 1), s))


def labels_up_to(s: int, m: int, kmax: int, field: str = REAL) -> List[BasisLabel]:
    """All labels of degrees 0..kmax, ordered by degree then (nu, mu)."""
    return [label for k in range(kmax + 1) for label in enumerate_I(s, m, k, field)]

