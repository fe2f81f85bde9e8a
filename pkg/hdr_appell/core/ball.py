"""
Exact L^2 inner products over the unit ball B_m.

Every integral is reported divided by pi^{floor(m/2)}, which keeps values in
QQ (or QQ_I) so that orthogonality is decided exactly.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..exceptions import DomainError
from .clifford import scalar_product
from .mvpoly import Monomial, MVPoly
from .scalars import Scalar, coerce, conjugate, domain_of, is_positive

log = logging.getLogger(__name__)


def pi_power(m: int) -> int:
    return m // 2


@dataclass(frozen=True)
class NormalizedBallValue:
    """(integral over B_m) / pi^{floor(m/2)} as an exact scalar."""

    value: Scalar
    m: int

    @property
    def pi_power(self) -> int:
        return pi_power(self.m)

    def __bool__(self) -> bool:
        return bool(self.value)


def _gamma_half(twice: int) -> Tuple[object, int]:
    """
    Gamma(twice / 2) as (rational, sqrt(pi) exponent).

    Gamma(n) = (n-1)! and Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi).
    """
    if twice <= 0:
        raise DomainError(f"Gamma is only needed at positive half-integers, got {twice}/2")
    if twice % 2 == 0:
        return QQ(factorial(twice // 2 - 1)), 0
    n = (twice - 1) // 2
    return QQ(factorial(2 * n), 4**n * factorial(n)), 1


@lru_cache(maxsize=1 << 16)
def _monomial_integral(alpha: Monomial) -> object:
    if any(a % 2 for a in alpha):
        return QQ(0)
    m = len(alpha)
    total = sum(alpha)
    value = QQ(2, total + m)
    sqrt_pi = 0
    for a in alpha:
        g, p = _gamma_half(a + 1)
        value *= g
        sqrt_pi += p
    g, p = _gamma_half(total + m)
    value /= g
    sqrt_pi -= p
    if sqrt_pi != 2 * pi_power(m):
        raise DomainError(f"Unexpected power of pi in the integral of x^{alpha}")
    return value


def monomial_ball_integral(alpha: Sequence[int], m: int) -> NormalizedBallValue:
    """
    Integral of x^alpha over B_m divided by pi^{floor(m/2)}.

    Raises:
        DomainError: If alpha does not have m entries.

    Example:
        >>> monomial_ball_integral((2, 0, 0), 3).value
        4/15
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != m or any(a < 0 for a in alpha):
        raise DomainError(f"Exponent vector {alpha} does not match R^{m}")
    return NormalizedBallValue(_monomial_integral(alpha), m)


def _by_parity(p: MVPoly) -> Dict[Tuple[int, ...], List]:
    groups: Dict[Tuple[int, ...], List] = {}
    for monomial, coeff in p.terms.items():
        groups.setdefault(tuple(a % 2 for a in monomial), []).append((monomial, coeff))
    return groups


def inner_value(f: MVPoly, g: MVPoly) -> Scalar:
    """The normalized value of (f, g) as a bare scalar."""
    f._check_compatible(g)
    K = domain_of(f.field)
    total = K.zero
    g_groups = _by_parity(g)
    for parity, f_terms in _by_parity(f).items():
        # only x^alpha x^beta with alpha + beta even in every entry survive
        g_terms = g_groups.get(parity)
        if not g_terms:
            continue
        for alpha, a in f_terms:
            for beta, b in g_terms:
                weight = scalar_product(a, b)
                if weight:
                    exponents = tuple(x + y for x, y in zip(alpha, beta))
                    total += weight * coerce(f.field, _monomial_integral(exponents))
    return total


def l2_inner_product(f: MVPoly, g: MVPoly) -> NormalizedBallValue:
    """
    (f, g) = integral over B_m of [conj(f) g]_0, conjugate linear in f.

    Raises:
        DomainError: If dimensions or fields differ.

    Example:
        >>> one = MVPoly.scalar(3, "real")
        >>> l2_inner_product(one, one).value
        4/3
    """
    return NormalizedBallValue(inner_value(f, g), f.dim)


@dataclass
class GramMatrix:
    """Hermitian matrix of normalized inner products."""

    m: int
    field: str
    entries: List[List[Scalar]] = dataclass_field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def pi_power(self) -> int:
        return pi_power(self.m)

    def diagonal(self) -> List[Scalar]:
        return [self.entries[i][i] for i in range(self.size)]

    def off_diagonal_witness(self) -> Optional[Tuple[int, int]]:
        """First (i, j), i < j, with a nonzero entry, or None."""
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.entries[i][j]:
                    return i, j
        return None

    def is_diagonal(self) -> bool:
        return self.off_diagonal_witness() is None

    def nonpositive_diagonal(self) -> List[int]:
        """Indices whose diagonal entry is not a positive real number."""
        return [i for i, value in enumerate(self.diagonal()) if not is_positive(self.field, value)]


def gram_matrix(
    basis: Sequence[MVPoly], m: Optional[int] = None, field: Optional[str] = None
) -> GramMatrix:
    """
    Pairwise inner products of ``basis``; only the upper triangle is
    integrated, the lower one is its conjugate.

    ``m`` and ``field`` are needed only for an empty basis.

    Raises:
        DomainError: If the polynomials do not share dimension and field.
    """
    if not basis:
        if m is None or field is None:
            raise DomainError("An empty Gram matrix needs m and field")
        return GramMatrix(m, field, [])
    m, field = basis[0].dim, basis[0].field
    n = len(basis)
    K = domain_of(field)
    entries = [[K.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = inner_value(basis[i], basis[j])
            entries[i][j] = value
            if j != i:
                entries[j][i] = conjugate(field, value)
    log.debug("Gram matrix of %d polynomials in R^%d", n, m)
    return GramMatrix(m, field, entries)
