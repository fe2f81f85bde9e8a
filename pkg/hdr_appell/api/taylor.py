"""Taylor expansion namespace."""

from typing import List, Optional, Sequence

from ..core.bases import BasisLabel
from ..core.mvpoly import MVPoly
from ..core.taylor import TaylorCoefficient, taylor_coefficients, taylor_reconstruct
from .base import BaseAPI


class TaylorAPI(BaseAPI):
    """Expansion of monogenic s-vector valued polynomials in the GT bases."""

    def coefficients(self, g: MVPoly, s: int, kmax: Optional[int] = None) -> List[TaylorCoefficient]:
        """
        Taylor coefficients of g for every label of degree up to kmax.

        Args:
            g: Monogenic s-vector valued polynomial; its dimension and field
                are used
            s: Grade
            kmax: Highest degree (default: degree of g)

        Returns:
            One coefficient per label, ordered by degree and label. Each
            carries the projected value and the derivative-chain value.

        Raises:
            DomainError: If g is not monogenic or not s-vector valued.

        Example:
            >>> f = client.bases.hdr(1, 3, 1, field="complex")[0].poly
            >>> sum(1 for c in client.taylor.coefficients(f, 1) if c.value)
            1
        """
        kmax = max(g.degree(), 0) if kmax is None else kmax
        return taylor_coefficients(g, s, g.dim, kmax, g.field)

    def reconstruct(
        self,
        coeffs: Sequence,
        labels: Sequence[BasisLabel],
        m: int,
        field: Optional[str] = None,
    ) -> MVPoly:
        """Sum of coefficient times basis element."""
        field = self._field(field)
        return taylor_reconstruct(coeffs, labels, m, field)
