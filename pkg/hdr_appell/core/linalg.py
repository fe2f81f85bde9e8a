"""
Exact linear algebra over (monomial, blade) coordinates.

Elimination runs through sympy's sparse ``DomainMatrix``; nullspaces and span
tests are read off the reduced row echelon form, which is unique, so every
result is deterministic.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ..exceptions import DomainError
from .clifford import Blade
from .mvpoly import Monomial, MVPoly, monomials_of_degree
from .scalars import Scalar, domain_of

log = logging.getLogger(__name__)

Coordinate = Tuple[Monomial, Blade]
SparseVector = Dict[int, Scalar]


@dataclass(frozen=True)
class CoordinateBasis:
    """
    A deterministic enumeration of (monomial, blade) coordinates.

    Example:
        >>> basis = CoordinateBasis.for_space(3, 1, [1])
        >>> len(basis)
        9
    """

    keys: Tuple[Coordinate, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {key: i for i, key in enumerate(self.keys)})

    def __len__(self) -> int:
        return len(self.keys)

    def index(self, key: Coordinate) -> int:
        try:
            return self._index[key]  # type: ignore[attr-defined]
        except KeyError as e:
            raise DomainError(f"Coordinate {key} is outside the coordinate space") from e

    @classmethod
    def for_space(cls, m: int, k: int, grades: Iterable[int]) -> "CoordinateBasis":
        """All k-homogeneous monomials times all blades of the given grades."""
        blades = [b for s in sorted(set(grades)) for b in combinations(range(1, m + 1), s)]
        return cls(tuple((a, b) for a in monomials_of_degree(m, k) for b in blades))

    @classmethod
    def spanning(cls, polys: Iterable[MVPoly]) -> "CoordinateBasis":
        """The coordinates carrying a nonzero entry in some polynomial."""
        keys = {(a, b) for p in polys for a, b, _ in p.coordinates()}
        return cls(tuple(sorted(keys, key=lambda key: (key[0], len(key[1]), key[1]))))


def to_vector(p: MVPoly, basis: CoordinateBasis) -> SparseVector:
    return {basis.index((a, b)): value for a, b, value in p.coordinates()}


def from_vector(vector: SparseVector, basis: CoordinateBasis, m: int, field: str) -> MVPoly:
    return MVPoly.from_coordinates(
        m, field, ((basis.keys[i][0], basis.keys[i][1], value) for i, value in vector.items())
    )


@dataclass
class LinearSystem:
    """
    Sparse rows over a coordinate basis.

    ``rows`` are constraints (for a kernel) or spanning vectors (for a span).
    """

    basis: CoordinateBasis
    field: str
    rows: List[SparseVector] = dataclass_field(default_factory=list)

    def matrix(self) -> DomainMatrix:
        K = domain_of(self.field)
        rep = {i: dict(row) for i, row in enumerate(self.rows) if row}
        return DomainMatrix(rep, (len(self.rows), len(self.basis)), K)


@dataclass
class Echelon:
    """Reduced row echelon form: ``rows[i]`` has a leading 1 in ``pivots[i]``."""

    rows: List[SparseVector]
    pivots: Tuple[int, ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Remainder of ``vector`` after removing its component in the row space."""
        remainder = dict(vector)
        for row, pivot in zip(self.rows, self.pivots):
            c = vector.get(pivot)
            if not c:
                continue
            for col, value in row.items():
                new = remainder.get(col, 0) - c * value
                if new:
                    remainder[col] = new
                else:
                    remainder.pop(col, None)
        return remainder

    def nullspace(self) -> List[SparseVector]:
        """One kernel vector per free column, in ascending column order."""
        pivot_set = set(self.pivots)
        out = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vector = {free: 1}
            for row, pivot in zip(self.rows, self.pivots):
                value = row.get(free)
                if value:
                    vector[pivot] = -value
            out.append(vector)
        return out


def rref(system: LinearSystem) -> Echelon:
    """
    Reduced row echelon form of the system's rows.

    Example:
        >>> basis = CoordinateBasis.for_space(2, 0, [0])
        >>> rref(LinearSystem(basis, "real", [{0: 2}])).rank
        1
    """
    K = domain_of(system.field)
    ncols = len(system.basis)
    if not system.rows or not ncols:
        return Echelon([], (), ncols)
    R, pivots = system.matrix().rref()
    sparse = R.to_sparse().rep
    rows = [
        {col: K.convert(value) for col, value in sparse.get(i, {}).items() if value}
        for i in range(len(pivots))
    ]
    log.debug(
        "rref of %dx%d system over %s: rank %d", len(system.rows), ncols, K, len(pivots)
    )
    return Echelon(rows, tuple(pivots), ncols)


def kernel(system: LinearSystem) -> List[SparseVector]:
    """Basis of the right nullspace of the constraint rows."""
    K = domain_of(system.field)
    echelon = rref(system)
    return [{i: K.convert(v) for i, v in vec.items()} for vec in echelon.nullspace()]


def span_system(polys: Sequence[MVPoly], basis: CoordinateBasis, field: str) -> LinearSystem:
    return LinearSystem(basis, field, [to_vector(p, basis) for p in polys])


def rank(polys: Sequence[MVPoly]) -> int:
    """Exact rank of a list of polynomials."""
    if not polys:
        return 0
    basis = CoordinateBasis.spanning(polys)
    return rref(span_system(polys, basis, polys[0].field)).rank


@dataclass
class SpanReport:
    """
    Outcome of comparing a constructed family with an oracle basis.

    ``unspanned_oracle`` and ``unspanned_constructed`` hold the indices of
    witnesses that lie outside the other family's span.
    """

    constructed_count: int
    oracle_count: int
    constructed_rank: int
    unspanned_oracle: List[int] = dataclass_field(default_factory=list)
    unspanned_constructed: List[int] = dataclass_field(default_factory=list)
    failures: List[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def witness(self, constructed: Sequence[MVPoly], oracle: Sequence[MVPoly]) -> Optional[MVPoly]:
        if self.unspanned_oracle:
            return oracle[self.unspanned_oracle[0]]
        if self.unspanned_constructed:
            return constructed[self.unspanned_constructed[0]]
        return None


def check_span_equality(constructed: Sequence[MVPoly], oracle: Sequence[MVPoly]) -> SpanReport:
    """
    Check that ``constructed`` is linearly independent and spans the same
    space as ``oracle``; never raises on a mismatch.

    Raises:
        DomainError: If the families mix dimensions or fields.
    """
    everything = list(constructed) + list(oracle)
    if not everything:
        return SpanReport(0, 0, 0)
    m, field = everything[0].dim, everything[0].field
    for p in everything:
        if p.dim != m or p.field != field:
            raise DomainError("Span comparison needs polynomials of one dimension and field")
    basis = CoordinateBasis.spanning(everything)
    constructed_echelon = rref(span_system(constructed, basis, field))
    oracle_echelon = rref(span_system(oracle, basis, field))
    report = SpanReport(len(constructed), len(oracle), constructed_echelon.rank)
    if len(constructed) != len(oracle):
        report.failures.append(
            f"cardinality: constructed {len(constructed)} vs oracle {len(oracle)}"
        )
    if constructed_echelon.rank != len(constructed):
        report.failures.append(
            f"dependence: rank {constructed_echelon.rank} for {len(constructed)} polynomials"
        )
    for i, p in enumerate(oracle):
        if constructed_echelon.reduce(to_vector(p, basis)):
            report.unspanned_oracle.append(i)
    for i, p in enumerate(constructed):
        if oracle_echelon.reduce(to_vector(p, basis)):
            report.unspanned_constructed.append(i)
    if report.unspanned_oracle:
        report.failures.append(f"oracle elements outside the span: {report.unspanned_oracle}")
    if report.unspanned_constructed:
        report.failures.append(
            f"constructed elements outside the oracle span: {report.unspanned_constructed}"
        )
    log.debug(
        "span check: %d constructed, %d oracle, %d failures",
        len(constructed),
        len(oracle),
        len(report.failures),
    )
    return report
