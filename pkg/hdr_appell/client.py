"""
Main hdr-appell client implementation.
"""

import logging
import os
from typing import Any, Dict, Optional

from .api.bases import BasesAPI
from .api.inner import InnerAPI
from .api.taylor import TaylorAPI
from .api.verify import VerifyAPI
from .core.caches import cache_info, clear_caches
from .core.scalars import check_field
from .exceptions import ConfigurationError, DomainError

log = logging.getLogger(__name__)

WORKERS_ENV = "HDR_APPELL_WORKERS"


def workers_from_env(default: int = 1) -> int:
    """
    Worker count from ``HDR_APPELL_WORKERS``.

    Raises:
        ConfigurationError: If the variable is set but not a positive integer.
    """
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or not raw.strip():
        return default
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigurationError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    if workers < 1:
        raise ConfigurationError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return workers


class AppellClient:
    """
    Entry point for building and checking Gelfand-Tsetlin bases.

    Args:
        field: Default coefficient field, ``"real"`` or ``"complex"``
            (default: real)
        workers: Processes used by ``verify.run_many`` (default: the
            ``HDR_APPELL_WORKERS`` environment variable, else 1)

    Example:
        >>> client = AppellClient(field="complex")
        >>> basis = client.bases.hdr(1, 3, 2)
        >>> client.inner.gram_hdr(1, 3, 2).is_diagonal()
        True
        >>> client.verify.run("appell", s=1, m=3, kmax=2).passed
        True
    """

    def __init__(self, field: str = "real", workers: Optional[int] = None):
        try:
            self.field = check_field(field)
        except DomainError as e:
            raise ConfigurationError(e.message) from e
        if workers is None:
            workers = workers_from_env()
        elif workers < 1:
            raise ConfigurationError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        log.debug("client with field=%s workers=%d", self.field, self.workers)

        # Initialize namespaces
        self.bases = BasesAPI(self)
        self.inner = InnerAPI(self)
        self.verify = VerifyAPI(self)
        self.taylor = TaylorAPI(self)

    def set_field(self, field: str) -> None:
        """Change the default field for this client and its namespaces."""
        self.field = check_field(field)
        for namespace in (self.bases, self.inner, self.verify, self.taylor):
            namespace.field = self.field

    @staticmethod
    def clear_caches() -> None:
        """Empty the process-wide caches of basis elements, factors and integrals."""
        clear_caches()

    @staticmethod
    def cache_info() -> Dict[str, Dict[str, Any]]:
        """Hits, misses and sizes of the process-wide caches."""
        return cache_info()
