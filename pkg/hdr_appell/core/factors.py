"""
Special functions and embedding factors.

Pochhammer symbols and Gegenbauer polynomials are computed by their explicit
sums over exact rationals. The harmonic factors F, the monogenic factors X and
the Hodge-de Rham factors X^{s,t,m}_{k,j} lift polynomials from R^{m-1} to R^m.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Optional, Tuple

from sympy.polys.domains import QQ

from ..exceptions import DomainError
from .clifford import Multivector
from .mvpoly import (
    MVPoly,
    dirac,
    dirac_minus,
    dirac_plus,
    lift,
    x_dot,
    x_wedge,
)
from .scalars import RationalLike, rational

log = logging.getLogger(__name__)

OPERAND = "operand"
RIGHT = "right"
READINGS = (OPERAND, RIGHT)


def pochhammer(nu: RationalLike, n: int):
    """
    Rising factorial (nu)_n = nu (nu+1) ... (nu+n-1).

    Example:
        >>> pochhammer("1/2", 2)
        3/4
    """
    if n < 0:
        raise DomainError(f"Pochhammer length must be nonnegative, got {n}")
    nu = rational(nu)
    result = QQ(1)
    for i in range(n):
        result *= nu + i
    return result


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over QQ, coefficients listed from degree 0 upward."""

    coefficients: Tuple = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: RationalLike):
        z = rational(z)
        total = QQ(0)
        for c in reversed(self.coefficients):
            total = total * z + c
        return total


def gegenbauer(nu: RationalLike, k: int) -> UniPoly:
    """
    Gegenbauer polynomial C^nu_k from the explicit sum
    sum_i (-1)^i (nu)_{k-i} / (i! (k-2i)!) (2z)^{k-2i}.

    Example:
        >>> gegenbauer(1, 2).coefficients
        (-1, 0, 4)
    """
    if k < 0:
        raise DomainError(f"Gegenbauer degree must be nonnegative, got {k}")
    coeffs = [QQ(0)] * (k + 1)
    for i in range(k // 2 + 1):
        n = k - 2 * i
        c = pochhammer(nu, k - i) * QQ(2**n) / QQ(factorial(i) * factorial(n))
        coeffs[n] = -c if i % 2 else c
    return UniPoly(tuple(coeffs))


def _zonal_coefficients(m: int, k: int, j: int) -> Tuple:
    # Coefficients c_i of x_m^{n-2i} |x|^{2i} in F^{(n)}_{m,j}, n = k - j.
    n = k - j
    if n == 0:
        return (QQ(1),)
    if m - 2 + 2 * j <= 0:
        raise DomainError(
            f"F^({n})_{{{m},{j}}} is undefined: (m-2+2j)_n vanishes for m={m}, j={j}"
        )
    prefactor = pochhammer(j + 1, n) / pochhammer(m - 2 + 2 * j, n)
    C = gegenbauer(QQ(m, 2) + j - 1, n)
    return tuple(prefactor * C.coefficients[n - 2 * i] for i in range(n // 2 + 1))


@lru_cache(maxsize=1024)
def factor_F(m: int, k: int, j: int, field: str = "real") -> MVPoly:
    """
    Harmonic embedding factor F^{(k-j)}_{m,j}, scalar valued and homogeneous
    of degree k-j.

    Args:
        m: Ambient dimension
        k: Degree of the lifted polynomial
        j: Degree of the polynomial being lifted
        field: Coefficient field of the result

    Raises:
        DomainError: If j > k, m < 2, or the Pochhammer denominator vanishes.

    Example:
        >>> factor_F(3, 1, 0) == MVPoly.variable(3, "real", 3)
        True
    """
    if m < 2 or not 0 <= j <= k:
        raise DomainError(f"factor_F needs m >= 2 and 0 <= j <= k, got m={m}, k={k}, j={j}")
    n = k - j
    x_m = MVPoly.variable(m, field, m)
    norm2 = MVPoly.zero(m, field)
    for i in range(1, m + 1):
        x_i = MVPoly.variable(m, field, i)
        norm2 = norm2 + x_i * x_i
    result = MVPoly.zero(m, field)
    for i, c in enumerate(_zonal_coefficients(m, k, j)):
        result = result + (x_m ** (n - 2 * i) * norm2**i) * c
    return result


@lru_cache(maxsize=1024)
def factor_X(m: int, k: int, j: int, field: str = "real") -> MVPoly:
    """
    Monogenic embedding factor
    X^{(k-j)}_{m,j} = F^{(k-j)}_{m,j} + (j+1)/(m+2j-1) F^{(k-j-1)}_{m,j+1} x' e_m
    with x' = x_1 e_1 + ... + x_{m-1} e_{m-1} and F^{(-1)} = 0.

    Example:
        >>> factor_X(3, 0, 0) == MVPoly.scalar(3, "real")
        True
    """
    result = factor_F(m, k, j, field)
    if k > j:
        e_m = Multivector.basis_vector(m, field, m)
        coefficient = QQ(j + 1, m + 2 * j - 1)
        x_prime = MVPoly.vector_variable(m, field, restricted=True)
        result = result + (factor_F(m, k, j + 1, field) * x_prime * e_m) * coefficient
    return result


def beta_const(s: int, m: int, k: int):
    """
    beta^{s,m}_k = -(k+m-s)/(k+s).

    Raises:
        DomainError: If k + s = 0.
    """
    if k + s == 0:
        raise DomainError("beta^{s,m}_k is undefined for k + s = 0")
    return QQ(-(k + m - s), k + s)


def is_branch_pair(s: int, m: int, k: int, t: int, j: int) -> bool:
    """True when (t, j) belongs to N^{s,m}_k."""
    if t not in (s - 1, s) or not 0 <= t <= m - 1 or not 0 <= j <= k:
        return False
    return not (t in (0, m - 1) and j != 0)


@dataclass(frozen=True)
class HdrFactorSpec:
    """
    Constants of the Hodge-de Rham embedding factor X^{s,t,m}_{k,j}.

    ``beta`` is None when ``alpha`` is zero and the correction term drops out.
    """

    m: int
    s: int
    t: int
    k: int
    j: int
    alpha: object
    beta: Optional[object] = None


def make_hdr_factor_spec(m: int, s: int, t: int, k: int, j: int) -> HdrFactorSpec:
    """
    Fill alpha and beta for the pair (t, j) of N^{s,m}_k.

    Raises:
        DomainError: If (t, j) is not in N^{s,m}_k.

    Example:
        >>> spec = make_hdr_factor_spec(3, 1, 1, 1, 0)
        >>> spec.alpha, spec.beta
        (-1/2, -1)
    """
    if m < 3 or not 0 <= s <= m or k < 0:
        raise DomainError(f"No branching for s={s}, m={m}, k={k}")
    if not is_branch_pair(s, m, k, t, j):
        raise DomainError(f"({t}, {j}) is not in N^{{{s},{m}}}_{k}")
    if t in (0, m - 1):
        return HdrFactorSpec(m, s, t, k, j, QQ(0))
    alpha = QQ(-(j + 1), m + 2 * j - 1)
    beta = QQ(-(j + m - 1 - t), j + t)
    return HdrFactorSpec(m, s, t, k, j, alpha, beta)


def _e_m_power(m: int, field: str, n: int) -> Multivector:
    result = Multivector.scalar(m, field)
    e_m = Multivector.basis_vector(m, field, m)
    for _ in range(n):
        result = result * e_m
    return result


def _check_seed(spec: HdrFactorSpec, g: MVPoly) -> None:
    if g.dim != spec.m - 1:
        raise DomainError(f"Seed lives in R^{g.dim}, expected R^{spec.m - 1}")
    if not g.is_grade_pure(spec.t):
        raise DomainError(f"Seed is not {spec.t}-vector valued: grades {g.grades()}")
    if not g.is_homogeneous(spec.j):
        raise DomainError(f"Seed is not homogeneous of degree {spec.j}")
    if dirac(g):
        raise DomainError(f"Seed is not monogenic in R^{g.dim}")


def apply_hdr_factor(spec: HdrFactorSpec, g: MVPoly, reading: str = OPERAND) -> MVPoly:
    """
    Apply X^{s,t,m}_{k,j} to a monogenic t-vector valued seed g on R^{m-1}:

        X^{(k-j)}_{m,j} e_m^{s-t} g
          + alpha X^{(k-1-j)}_{m,j+1} (beta^{t-s} x' ^ b + beta^{t-s+1} x' . b)

    with b = e_m^{s-t+1} g. The ``"right"`` reading multiplies g by the
    powers of e_m from the right instead; it exists to show that the result
    then fails to be grade pure.

    Raises:
        DomainError: If the seed has the wrong dimension, grade or degree, is
            not monogenic, or the reading is unknown.

    Example:
        >>> e1 = MVPoly.constant(Multivector.basis_vector(2, "real", 1))
        >>> f = apply_hdr_factor(make_hdr_factor_spec(3, 1, 1, 1, 0), e1)
        >>> f.grades()
        [1]
    """
    if reading not in READINGS:
        raise DomainError(f"Unknown reading {reading!r}; expected one of {READINGS}")
    _check_seed(spec, g)
    m, s, t, k, j = spec.m, spec.s, spec.t, spec.k, spec.j
    G = lift(g, m)

    def attach(power: int) -> MVPoly:
        e = _e_m_power(m, G.field, power)
        return G * e if reading == RIGHT else e * G

    result = factor_X(m, k, j, G.field) * attach(s - t)
    if spec.alpha and k > j:
        b = attach(s - t + 1)
        beta = spec.beta
        wedge_weight = 1 / beta if t < s else QQ(1)
        dot_weight = QQ(1) if t < s else beta
        bracket = x_wedge(b, restricted=True) * wedge_weight + x_dot(b, restricted=True) * dot_weight
        result = result + (factor_X(m, k, j + 1, G.field) * bracket) * spec.alpha
    return result


def apply_gmt_factor(s: int, m: int, k: int, f: MVPoly, check: bool = True) -> MVPoly:
    """
    ((x ^) + beta^{s,m}_{k-1} (x .)) f for f in H^s_{k-1}(R^m).

    Raises:
        DomainError: If k < 1, k - 1 + s = 0, or f is not an s-vector valued
            (k-1)-homogeneous solution of the Hodge-de Rham system.

    Example:
        >>> e1 = MVPoly.constant(Multivector.basis_vector(3, "real", 1))
        >>> sorted(apply_gmt_factor(1, 3, 1, e1).grades())
        [0, 2]
    """
    if k < 1:
        raise DomainError(f"apply_gmt_factor needs k >= 1, got {k}")
    beta = beta_const(s, m, k - 1)
    if f.dim != m:
        raise DomainError(f"Polynomial lives in R^{f.dim}, expected R^{m}")
    if check:
        if not f.is_grade_pure(s):
            raise DomainError(f"Polynomial is not {s}-vector valued: grades {f.grades()}")
        if not f.is_homogeneous(k - 1):
            raise DomainError(f"Polynomial is not homogeneous of degree {k - 1}")
        if dirac_plus(f) or dirac_minus(f):
            raise DomainError("Polynomial does not solve the Hodge-de Rham system")
    return x_wedge(f) + x_dot(f) * beta
