"""Basis construction namespace."""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.bases import (
    BasisLabel,
    GMTBasisElement,
    GTBasisElement,
    build_element,
    count_I,
    enumerate_I,
    enumerate_J,
    blade_e,
    gmt_basis,
    harmonic_basis,
    harmonic_labels,
    hdr_basis,
)
from ..core.clifford import Multivector
from ..core.mvpoly import MVPoly
from ..core.oracle import HDR, oracle_space
from .base import BaseAPI

log = logging.getLogger(__name__)


class BasesAPI(BaseAPI):
    """
    Gelfand-Tsetlin bases and their index sets.

    Builds Hodge-de Rham, generalized Moisil-Theodoresco and harmonic bases.
    """

    def hdr(self, s: int, m: int, k: int, field: Optional[str] = None) -> List[GTBasisElement]:
        """
        Basis of H^s_k(R^m).

        Args:
            s: Grade
            m: Dimension (m >= 3)
            k: Degree
            field: Coefficient field (default: client field)

        Returns:
            Basis elements in label order

        Example:
            >>> basis = client.bases.hdr(1, 3, 2)
            >>> len(basis)
            7
        """
        field = self._field(field)
        return hdr_basis(s, m, k, field)

    def labels(self, s: int, m: int, k: int, field: Optional[str] = None) -> List[BasisLabel]:
        """
        The label set I^{s,m}_k.

        Example:
            >>> [label.nu for label in client.bases.labels(1, 3, 0)]
            [(-1,), (0,), (1,)]
        """
        field = self._field(field)
        return enumerate_I(s, m, k, field)

    def element(self, label: BasisLabel) -> GTBasisElement:
        """Build one basis element from its label."""
        return build_element(label)

    def count(self, s: int, m: int, k: int) -> int:
        """Dimension of H^s_k(R^m) from the branching recursion."""
        return count_I(s, m, k)

    def gmt(
        self, grades: Iterable[int], m: int, k: int, field: Optional[str] = None
    ) -> List[GMTBasisElement]:
        """
        Basis of the k-homogeneous monogenic polynomials with values in the
        given grades.

        Example:
            >>> len(client.bases.gmt([1], 3, 1)) == len(client.bases.hdr(1, 3, 1))
            True
        """
        field = self._field(field)
        return gmt_basis(grades, m, k, field)

    def harmonic(self, m: int, k: int) -> List[Tuple[Tuple[int, ...], MVPoly]]:
        """
        Complex harmonic basis with its labels (k_{m-1}, ..., k_3, +-k_2).

        Example:
            >>> len(client.bases.harmonic(3, 2))
            5
        """
        return list(zip(harmonic_labels(m, k), harmonic_basis(m, k)))

    def blades(self, s: int, m: int, field: Optional[str] = None) -> Dict[Tuple[int, ...], Multivector]:
        """The blade basis e^{s,nu} of the s-vectors, keyed by nu."""
        field = self._field(field)
        return {nu: blade_e(m, s, nu, field) for nu in enumerate_J(s, m)}

    def dims(
        self, m: int, kmax: int, with_oracle: bool = False, field: Optional[str] = None
    ) -> Dict[int, List[Dict[str, int]]]:
        """
        Table of |I^{s,m}_k| for 0 <= s <= m and 0 <= k <= kmax.

        Args:
            m: Dimension
            kmax: Highest degree
            with_oracle: Also compute the exact kernel rank of the
                Hodge-de Rham system for every entry
            field: Coefficient field for the oracle (default: client field)

        Returns:
            Mapping s -> list of {"k", "count"[, "oracle_rank"]}
        """
        field = self._field(field)
        table: Dict[int, List[Dict[str, int]]] = {}
        for s in range(m + 1):
            rows = []
            for k in range(kmax + 1):
                row = {"k": k, "count": count_I(s, m, k)}
                if with_oracle:
                    row["oracle_rank"] = len(oracle_space(HDR, m, k, field, s=s))
                rows.append(row)
            table[s] = rows
        log.debug("dimension table for m=%d up to k=%d", m, kmax)
        return table
