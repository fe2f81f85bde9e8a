"""Inner product namespace."""

from typing import Iterable, Optional, Sequence

from ..core.ball import GramMatrix, NormalizedBallValue, gram_matrix, l2_inner_product
from ..core.bases import gmt_basis, harmonic_basis, hdr_basis
from ..core.mvpoly import MVPoly
from ..core.scalars import COMPLEX
from .base import BaseAPI


class InnerAPI(BaseAPI):
    """
    Exact L^2 inner products over the unit ball.

    All values are divided by pi^{floor(m/2)}.
    """

    def product(self, f: MVPoly, g: MVPoly) -> NormalizedBallValue:
        """
        (f, g), conjugate linear in f.

        Example:
            >>> one = MVPoly.scalar(3, "real")
            >>> client.inner.product(one, one).value
            4/3
        """
        return l2_inner_product(f, g)

    def gram(self, polys: Sequence[MVPoly]) -> GramMatrix:
        """Gram matrix of arbitrary polynomials of one dimension and field."""
        return gram_matrix(list(polys))

    def gram_hdr(self, s: int, m: int, k: int, field: Optional[str] = None) -> GramMatrix:
        """
        Gram matrix of the basis of H^s_k(R^m).

        Example:
            >>> client.inner.gram_hdr(1, 3, 1).is_diagonal()
            True
        """
        field = self._field(field)
        return gram_matrix([e.poly for e in hdr_basis(s, m, k, field)], m, field)

    def gram_gmt(
        self, grades: Iterable[int], m: int, k: int, field: Optional[str] = None
    ) -> GramMatrix:
        field = self._field(field)
        return gram_matrix([e.poly for e in gmt_basis(grades, m, k, field)], m, field)

    def gram_harmonic(self, m: int, k: int) -> GramMatrix:
        return gram_matrix(harmonic_basis(m, k), m, COMPLEX)
