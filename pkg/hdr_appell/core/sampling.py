"""
Seeded random inputs for property checks.

All generators draw from a caller-supplied ``random.Random`` so that a seed
fixes every sample.
"""

import random
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..exceptions import DomainError
from .clifford import Multivector
from .mvpoly import MVPoly, monomials_of_degree
from .scalars import COMPLEX, Scalar, scalar


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, bound: int = 5, max_denominator: int = 4):
    return QQ(rng.randint(-bound, bound), rng.randint(1, max_denominator))


def random_scalar(rng: random.Random, field: str, nonzero: bool = False) -> Scalar:
    while True:
        im = random_rational(rng) if field == COMPLEX else 0
        value = scalar(field, random_rational(rng), im)
        if value or not nonzero:
            return value


def random_multivector(
    rng: random.Random,
    m: int,
    field: str,
    terms: int = 3,
    grades: Optional[Iterable[int]] = None,
) -> Multivector:
    """A sum of up to ``terms`` random blades of the given grades (default all)."""
    grades = list(range(m + 1) if grades is None else grades)
    blades = [b for s in grades for b in combinations(range(1, m + 1), s)]
    chosen = rng.sample(blades, min(terms, len(blades)))
    return Multivector(m, field, {b: random_scalar(rng, field) for b in chosen})


def random_vector(rng: random.Random, m: int, field: str) -> Multivector:
    return random_multivector(rng, m, field, terms=m, grades=[1])


def random_poly(
    rng: random.Random,
    m: int,
    field: str,
    degree: int = 2,
    terms: int = 3,
    homogeneous: bool = False,
    grades: Optional[Iterable[int]] = None,
) -> MVPoly:
    """
    A random polynomial with up to ``terms`` monomials of degree at most
    ``degree`` (exactly ``degree`` when ``homogeneous``).
    """
    degrees = [degree] if homogeneous else list(range(degree + 1))
    monomials = [a for k in degrees for a in monomials_of_degree(m, k)]
    chosen = rng.sample(monomials, min(terms, len(monomials)))
    grades = None if grades is None else list(grades)
    return MVPoly(
        m,
        field,
        {a: random_multivector(rng, m, field, terms=2, grades=grades) for a in chosen},
    )


def random_combination(
    rng: random.Random, polys: Sequence[MVPoly], field: str, density: float = 0.6
) -> Tuple[List[Scalar], MVPoly]:
    """
    Random rational coefficients c_i (some zero) and sum_i c_i p_i.

    Raises:
        DomainError: If ``polys`` is empty.
    """
    if not polys:
        raise DomainError("random_combination needs at least one polynomial")
    coeffs = [
        random_scalar(rng, field) if rng.random() < density else scalar(field, 0)
        for _ in polys
    ]
    total = MVPoly.zero(polys[0].dim, field)
    for c, p in zip(coeffs, polys):
        if c:
            total = total + p * c
    return coeffs, total
