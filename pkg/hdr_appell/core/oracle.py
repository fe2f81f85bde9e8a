"""
Brute-force oracles: exact kernels of the defining differential systems.

Each operator is written out on every (monomial, blade) coordinate of the
k-homogeneous polynomials with values in the chosen grades, and the nullspace
is taken by exact elimination.
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from ..exceptions import DomainError
from .clifford import blade_product
from .linalg import CoordinateBasis, LinearSystem, from_vector, kernel
from .mvpoly import MVPoly
from .scalars import check_field, domain_of

log = logging.getLogger(__name__)

HDR = "hdr"
MONOGENIC = "monogenic"
HARMONIC = "harmonic"
CONSTRAINTS = (HDR, MONOGENIC, HARMONIC)


def _first_order_images(m: int, monomial, blade, split: bool):
    # d/dx_j (x^a e_B) = a_j x^{a - e_j} e_B, then e_j on the left.
    for j in range(1, m + 1):
        power = monomial[j - 1]
        if not power:
            continue
        lowered = monomial[: j - 1] + (power - 1,) + monomial[j:]
        sign, result = blade_product((j,), blade, m)
        tag = ("minus" if j in blade else "plus") if split else "dirac"
        yield (tag, lowered, result), sign * power


def _laplacian_images(m: int, monomial, blade):
    for j in range(1, m + 1):
        power = monomial[j - 1]
        if power < 2:
            continue
        lowered = monomial[: j - 1] + (power - 2,) + monomial[j:]
        yield ("laplacian", lowered, blade), power * (power - 1)


def constraint_system(
    constraint: str, m: int, k: int, field: str, grades: Iterable[int]
) -> LinearSystem:
    """
    The linear constraints of ``constraint`` on the coordinates of the
    k-homogeneous polynomials with values in ``grades``.

    Raises:
        DomainError: If the constraint is unknown.
    """
    if constraint not in CONSTRAINTS:
        raise DomainError(f"Unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")
    basis = CoordinateBasis.for_space(m, k, grades)
    K = domain_of(field)
    row_of: Dict[Tuple, int] = {}
    rows: List[Dict[int, object]] = []
    for column, (monomial, blade) in enumerate(basis.keys):
        if constraint == HARMONIC:
            images = _laplacian_images(m, monomial, blade)
        else:
            images = _first_order_images(m, monomial, blade, split=constraint == HDR)
        for key, value in images:
            if key not in row_of:
                row_of[key] = len(rows)
                rows.append({})
            row = rows[row_of[key]]
            total = row.get(column, K.zero) + K.convert(value)
            if total:
                row[column] = total
            else:
                row.pop(column, None)
    return LinearSystem(basis, field, rows)


def oracle_space(
    constraint: str,
    m: int,
    k: int,
    field: str = "real",
    s: Optional[int] = None,
    grades: Optional[Iterable[int]] = None,
) -> List[MVPoly]:
    """
    Basis of the exact solution space of a constraint among k-homogeneous
    polynomials, read off the reduced row echelon form.

    Args:
        constraint: ``"hdr"`` (d+ P = d- P = 0 on s-vector valued P),
            ``"monogenic"`` (dP = 0 with values in ``grades``, default all
            grades) or ``"harmonic"`` (scalar valued, Laplacian zero)
        m: Ambient dimension
        k: Degree
        field: Coefficient field
        s: Grade for the ``"hdr"`` constraint
        grades: Value grades for the ``"monogenic"`` constraint

    Raises:
        DomainError: If the arguments are out of range.

    Example:
        >>> len(oracle_space("hdr", 3, 1, s=1))
        5
    """
    check_field(field)
    if m < 2 or k < 0:
        raise DomainError(f"Oracle needs m >= 2 and k >= 0, got m={m}, k={k}")
    if constraint == HDR:
        if s is None or not 0 <= s <= m:
            raise DomainError(f"The hdr constraint needs a grade in 0..{m}, got {s}")
        value_grades = [s]
    elif constraint == HARMONIC:
        value_grades = [0]
    else:
        value_grades = sorted(set(range(m + 1) if grades is None else grades))
        if any(not 0 <= g <= m for g in value_grades):
            raise DomainError(f"Grades {value_grades} out of range 0..{m}")
    system = constraint_system(constraint, m, k, field, value_grades)
    vectors = kernel(system)
    log.debug(
        "oracle %s m=%d k=%d grades=%s: %d unknowns, %d equations, kernel %d",
        constraint,
        m,
        k,
        value_grades,
        len(system.basis),
        len(system.rows),
        len(vectors),
    )
    return [from_vector(v, system.basis, m, field) for v in vectors]
