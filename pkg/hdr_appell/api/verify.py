"""Verification namespace."""

import inspect
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.serialize import report_to_json
from ..core.verify import SUITES, SuiteReport, run_suite
from .base import BaseAPI

log = logging.getLogger(__name__)

Job = Tuple[str, Dict[str, Any]]


def _run_serialized(job: Job) -> Dict[str, Any]:
    name, params = job
    return report_to_json(run_suite(name, **params))


class VerifyAPI(BaseAPI):
    """
    Runs the verification suites.

    Suites: kernel, orthogonality, completeness, appell, branching, gmt,
    harmonic, algebra, taylor, invariance.
    """

    @staticmethod
    def suites() -> List[str]:
        return sorted(SUITES)

    def params_for(self, name: str, field: Optional[str] = None, **params: Any) -> Dict[str, Any]:
        """Fill in the client's field for suites that take one."""
        suite = SUITES.get(name)
        if suite is not None and "field" in inspect.signature(suite).parameters:
            params.setdefault("field", self._field(field))
        return params

    def run(self, name: str, field: Optional[str] = None, **params: Any) -> SuiteReport:
        """
        Run one suite.

        Args:
            name: Suite name
            field: Coefficient field (default: client field; ignored by
                suites with a fixed field)
            **params: Suite parameters such as s, m, k, kmax, grades

        Returns:
            The suite report

        Raises:
            DomainError: If the suite is unknown or the parameters are out
                of range.

        Example:
            >>> report = client.verify.run("kernel", s=1, m=3, k=2)
            >>> report.passed
            True
        """
        return run_suite(name, **self.params_for(name, field, **params))

    def run_many(self, jobs: Sequence[Job]) -> List[Dict[str, Any]]:
        """
        Run several suites and return their JSON reports in job order.

        Jobs are spread over ``client.workers`` processes when more than one
        worker is configured.
        """
        jobs = [(name, self.params_for(name, **params)) for name, params in jobs]
        workers = min(self.client.workers, len(jobs))
        if workers <= 1:
            return [_run_serialized(job) for job in jobs]
        log.info("running %d suites on %d workers", len(jobs), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_serialized, jobs))
