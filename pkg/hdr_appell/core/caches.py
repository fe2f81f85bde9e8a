"""
Memoized constructions.

Basis elements, embedding factors, ball integrals and blade products are
cached per process. The caches are bounded; :func:`clear_caches` empties
them all.
"""

import logging
from typing import Any, Callable, Dict

from . import ball, bases, clifford, factors, mvpoly, taylor

log = logging.getLogger(__name__)


def _cached() -> Dict[str, Callable[..., Any]]:
    return {
        "blade_product": clifford.blade_product,
        "basis_vector": mvpoly._basis_vector,
        "monomial_integral": ball._monomial_integral,
        "chains": bases._chains,
        "count": bases._count,
        "seed_vector": bases._seed_vector,
        "build_element": bases.build_element,
        "factor_F": factors.factor_F,
        "factor_X": factors.factor_X,
        "component_inverse": taylor._component_inverse,
    }


def cache_info() -> Dict[str, Dict[str, Any]]:
    """Hits, misses, current size and bound of every cache."""
    out = {}
    for name, fn in _cached().items():
        info = fn.cache_info()  # type: ignore[attr-defined]
        out[name] = {
            "hits": info.hits,
            "misses": info.misses,
            "size": info.currsize,
            "maxsize": info.maxsize,
        }
    return out


def clear_caches() -> None:
    """Empty every cache."""
    for fn in _cached().values():
        fn.cache_clear()  # type: ignore[attr-defined]
    log.debug("caches cleared")
