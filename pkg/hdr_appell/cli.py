"""
Command-line front end.

Every command writes one canonical JSON document (sorted keys, exact
rationals as strings) to ``--output`` or stdout. Exit codes: 0 success,
1 verification failure, 2 usage error, 3 internal error.
"""

import argparse
import json
import logging
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .client import AppellClient
from .core.ball import l2_inner_product
from .core.bases import harmonic_labels
from .core.mvpoly import MVPoly
from .core.scalars import COMPLEX, FIELDS, REAL, format_rational, real_imag
from .core.serialize import (
    dumps,
    element_to_json,
    gram_to_json,
    label_to_json,
    poly_from_json,
    poly_terms_to_json,
    taylor_to_json,
)
from .core.taylor import chain_mismatches
from .core.verify import SUITES
from .exceptions import DomainError, HdrAppellError, UsageError, VerificationError

log = logging.getLogger(__name__)

COMMANDS = ("basis-hdr", "basis-gmt", "basis-harmonic", "verify", "gram", "taylor", "dims")
GRAM_BASES = ("hdr", "gmt", "harmonic")
ALL_SUITES = "all"

# Suite name -> parameters it needs from the job.
SUITE_PARAMS: Dict[str, Tuple[str, ...]] = {
    "kernel": ("s", "m", "k"),
    "orthogonality": ("s", "m", "k"),
    "completeness": ("s", "m", "k"),
    "appell": ("s", "m", "kmax"),
    "branching": ("s", "m", "k"),
    "gmt": ("grades", "m", "k"),
    "harmonic": ("m", "k"),
    "algebra": ("m",),
    "taylor": ("s", "m", "kmax"),
    "invariance": ("s", "m", "k"),
}
SEEDED_SUITES = ("algebra", "taylor")


@dataclass(frozen=True)
class JobSpec:
    """
    One CLI invocation.

    Attributes:
        command: One of :data:`COMMANDS`
        m: Dimension
        s: Grade
        grades: Grade set S for the generalized Moisil-Theodoresco system
        k: Degree
        kmax: Highest degree for Appell, Taylor and dims jobs
        field: ``"real"`` or ``"complex"``
        seed: Seed of the randomized checks; recorded in the output
        samples: Sample count for randomized suites (default: suite default)
        suite: Suite name or ``"all"`` for verify jobs
        basis: Basis family for gram jobs
        input: Polynomial JSON file for taylor jobs
        output: Output path; stdout when omitted
        with_oracle: Compare dims against the kernel rank
    """

    command: str
    m: Optional[int] = None
    s: Optional[int] = None
    grades: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None
    kmax: Optional[int] = None
    field: str = REAL
    seed: int = 0
    samples: Optional[int] = None
    suite: Optional[str] = None
    basis: str = "hdr"
    input: Optional[str] = None
    output: Optional[str] = None
    with_oracle: bool = True

    def require(self, *names: str) -> None:
        missing = [f"--{name.replace('grades', 'S')}" for name in names if getattr(self, name) is None]
        if missing:
            raise UsageError(f"{self.command} needs {', '.join(missing)}")

    def validate(self) -> "JobSpec":
        """
        Check ranges before dispatch.

        Raises:
            UsageError: On a missing flag or an out-of-range value.
        """
        if self.command not in COMMANDS:
            raise UsageError(f"Unknown command {self.command!r}")
        if self.field not in FIELDS:
            raise UsageError(f"--field must be one of {FIELDS}")
        if self.m is not None and self.m < 3:
            raise UsageError(f"--m must be at least 3, got {self.m}")
        if self.s is not None and self.m is not None and not 0 <= self.s <= self.m:
            raise UsageError(f"--s must lie in 0..{self.m}, got {self.s}")
        if self.grades is not None:
            if not self.grades:
                raise UsageError("--S must name at least one grade")
            if self.m is not None and any(not 0 <= g <= self.m for g in self.grades):
                raise UsageError(f"--S grades must lie in 0..{self.m}, got {list(self.grades)}")
        for name in ("k", "kmax"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise UsageError(f"--{name} must be nonnegative, got {value}")
        if self.samples is not None and self.samples < 1:
            raise UsageError(f"--samples must be positive, got {self.samples}")

        if self.command == "basis-hdr":
            self.require("m", "s", "k")
        elif self.command == "basis-gmt":
            self.require("m", "grades", "k")
        elif self.command == "basis-harmonic":
            self.require("m", "k")
        elif self.command == "gram":
            if self.basis not in GRAM_BASES:
                raise UsageError(f"--basis must be one of {GRAM_BASES}")
            self.require("m", "k", *{"hdr": ("s",), "gmt": ("grades",), "harmonic": ()}[self.basis])
        elif self.command == "taylor":
            self.require("input", "s")
        elif self.command == "dims":
            self.require("m", "kmax")
        elif self.command == "verify":
            self.require("suite", "m")
            if self.suite != ALL_SUITES:
                if self.suite not in SUITES:
                    raise UsageError(f"--suite must be one of {sorted(SUITES) + [ALL_SUITES]}")
                if self.suite_params(self.suite) is None:
                    needed = SUITE_PARAMS[self.suite]
                    self.require(*(n for n in needed if n != "kmax" or self.k is None))
        return self

    def recorded(self) -> Dict[str, Any]:
        """The job as it appears in the output document."""
        return {
            key: (list(value) if isinstance(value, tuple) else value)
            for key, value in asdict(self).items()
            if value is not None and key not in ("output", "input")
        }

    def suite_params(self, name: str) -> Optional[Dict[str, Any]]:
        """Parameters for one suite, or None when the job lacks one."""
        params: Dict[str, Any] = {}
        for key in SUITE_PARAMS[name]:
            value = getattr(self, key)
            if key == "kmax" and value is None:
                value = self.k
            if value is None:
                return None
            params[key] = list(value) if key == "grades" else value
        if name in SEEDED_SUITES:
            params["seed"] = self.seed
            if self.samples is not None:
                params["samples"] = self.samples
        if name != "harmonic":
            params["field"] = self.field
        return params

    def suite_jobs(self) -> List[Tuple[str, Dict[str, Any]]]:
        names = sorted(SUITES) if self.suite == ALL_SUITES else [self.suite]
        jobs = []
        for name in names:
            params = self.suite_params(name)
            if params is None:
                log.info("skipping suite %s: missing parameters", name)
                continue
            jobs.append((name, params))
        if not jobs:
            raise UsageError("No suite can run with the given flags")
        return jobs


class CommandResult:
    """A JSON document and whether the job passed."""

    def __init__(self, document: Dict[str, Any], passed: bool = True):
        self.document = document
        self.passed = passed


def _norm2(poly) -> Any:
    return l2_inner_product(poly, poly).value


def _basis_hdr(client: AppellClient, job: JobSpec) -> CommandResult:
    elements = [
        element_to_json(e.label, e.poly, _norm2(e.poly))
        for e in client.bases.hdr(job.s, job.m, job.k)
    ]
    return CommandResult({"pi_power": job.m // 2, "elements": elements})


def _basis_gmt(client: AppellClient, job: JobSpec) -> CommandResult:
    elements = [
        element_to_json(e.label, e.poly, _norm2(e.poly), lifted=e.lifted)
        for e in client.bases.gmt(job.grades, job.m, job.k)
    ]
    return CommandResult({"pi_power": job.m // 2, "elements": elements})


def _basis_harmonic(client: AppellClient, job: JobSpec) -> CommandResult:
    elements = []
    for mu, poly in client.bases.harmonic(job.m, job.k):
        elements.append(
            {
                "m": job.m,
                "field": COMPLEX,
                "k": job.k,
                "mu": list(mu),
                "norm2": format_rational(real_imag(COMPLEX, _norm2(poly))[0]),
                "terms": poly_terms_to_json(poly),
            }
        )
    return CommandResult({"pi_power": job.m // 2, "elements": elements})


def _verify(client: AppellClient, job: JobSpec) -> CommandResult:
    reports = client.verify.run_many(job.suite_jobs())
    passed = all(report["passed"] for report in reports)
    return CommandResult({"passed": passed, "reports": reports}, passed)


def _gram(client: AppellClient, job: JobSpec) -> CommandResult:
    if job.basis == "hdr":
        elements = client.bases.hdr(job.s, job.m, job.k)
        labels = [label_to_json(e.label) for e in elements]
        gram = client.inner.gram_hdr(job.s, job.m, job.k)
    elif job.basis == "gmt":
        elements = client.bases.gmt(job.grades, job.m, job.k)
        labels = [dict(label_to_json(e.label), lifted=e.lifted) for e in elements]
        gram = client.inner.gram_gmt(job.grades, job.m, job.k)
    else:
        labels = [{"mu": list(mu)} for mu in harmonic_labels(job.m, job.k)]
        gram = client.inner.gram_harmonic(job.m, job.k)
    return CommandResult(
        {"gram": gram_to_json(gram), "labels": labels, "diagonal": gram.is_diagonal()}
    )


def bind_input(job: JobSpec) -> Tuple[JobSpec, MVPoly]:
    """
    Read the polynomial of a taylor job and take m and field from it.

    Raises:
        UsageError: If the file is unreadable or malformed, or the job's
            dimension or grade does not fit the polynomial.
    """
    try:
        with open(job.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"Cannot read {job.input}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{job.input} is not valid JSON: {e}") from e
    try:
        g = poly_from_json(data)
    except DomainError as e:
        raise UsageError(f"{job.input}: {e.message}") from e
    if job.m is not None and job.m != g.dim:
        raise UsageError(f"--m {job.m} does not match the input dimension {g.dim}")
    bound = replace(job, m=g.dim, field=g.field).validate()
    return bound, g


def _taylor(client: AppellClient, job: JobSpec, g: MVPoly) -> CommandResult:
    try:
        coefficients = client.taylor.coefficients(g, job.s, job.kmax)
    except DomainError as e:
        raise UsageError(f"{job.input}: {e.message}") from e
    return CommandResult(
        {
            "input_field": g.field,
            "input_m": g.dim,
            "coefficients": taylor_to_json(coefficients, g.field),
            "chain_mismatches": chain_mismatches(coefficients),
        }
    )


def _dims(client: AppellClient, job: JobSpec) -> CommandResult:
    table = client.bases.dims(job.m, job.kmax, with_oracle=job.with_oracle)
    rows = []
    passed = True
    for s in sorted(table):
        for row in table[s]:
            entry = dict(row, s=s)
            if job.with_oracle:
                entry["matches"] = row["count"] == row["oracle_rank"]
                passed = passed and entry["matches"]
            rows.append(entry)
    return CommandResult({"passed": passed, "table": rows}, passed)


HANDLERS: Dict[str, Callable[[AppellClient, JobSpec], CommandResult]] = {
    "basis-hdr": _basis_hdr,
    "basis-gmt": _basis_gmt,
    "basis-harmonic": _basis_harmonic,
    "verify": _verify,
    "gram": _gram,
    "dims": _dims,
}


def run(job: JobSpec) -> CommandResult:
    """
    Validate and execute a job.

    Raises:
        UsageError: If the job is invalid.
        HdrAppellError: If the computation fails.
    """
    job.validate()
    if job.command == "basis-harmonic" or (job.command == "gram" and job.basis == "harmonic"):
        job = replace(job, field=COMPLEX)
    if job.command == "taylor":
        job, g = bind_input(job)
    client = AppellClient(field=job.field)
    log.debug("running %s", job)
    if job.command == "taylor":
        result = _taylor(client, job, g)
    else:
        result = HANDLERS[job.command](client, job)
    result.document = {
        "command": job.command,
        "job": job.recorded(),
        "seed": job.seed,
        "version": __version__,
        **result.document,
    }
    return result


def write_output(text: str, path: Optional[str]) -> None:
    """Write to stdout, or atomically replace ``path``."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hdr-appell-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _grade_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(sorted({int(part) for part in text.split(",") if part.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated grades, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdr-appell",
        description="Exact Gelfand-Tsetlin Appell bases of Hodge-de Rham systems.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        if name != "taylor":
            # taylor takes m and the field from its input polynomial
            sub.add_argument("--m", type=int, required=True, help="dimension")
            sub.add_argument("--field", choices=FIELDS, default=REAL)
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--output", "-o", help="output file (default: stdout)")
        return sub

    sub = add("basis-hdr", "basis of H^s_k(R^m)")
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    sub = add("basis-gmt", "basis of the monogenic polynomials with values in the grades S")
    sub.add_argument("--S", dest="grades", type=_grade_list, required=True, help="e.g. 0,1,3")
    sub.add_argument("--k", type=int, required=True)

    sub = add("basis-harmonic", "complex harmonic basis")
    sub.add_argument("--k", type=int, required=True)

    sub = add("verify", "run verification suites")
    sub.add_argument("--suite", required=True, choices=sorted(SUITES) + [ALL_SUITES])
    sub.add_argument("--s", type=int)
    sub.add_argument("--S", dest="grades", type=_grade_list)
    sub.add_argument("--k", type=int)
    sub.add_argument("--kmax", type=int)
    sub.add_argument("--samples", type=int)

    sub = add("gram", "Gram matrix of a basis")
    sub.add_argument("--basis", choices=GRAM_BASES, default="hdr")
    sub.add_argument("--s", type=int)
    sub.add_argument("--S", dest="grades", type=_grade_list)
    sub.add_argument("--k", type=int, required=True)

    sub = add("taylor", "Taylor coefficients of a polynomial read from JSON")
    sub.add_argument("--input", required=True, help="polynomial JSON file")
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--kmax", type=int)

    sub = add("dims", "table of |I^{s,m}_k|")
    sub.add_argument("--kmax", type=int, required=True)
    sub.add_argument("--no-oracle", dest="with_oracle", action="store_false")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    names = {f.name for f in fields(JobSpec)}
    return JobSpec(**{key: value for key, value in vars(args).items() if key in names})


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        job = job_from_args(args)
        result = run(job)
        write_output(dumps(result.document), job.output)
        if not result.passed:
            raise VerificationError("verification failed")
    except HdrAppellError as e:
        print(f"hdr-appell: error: {e.message}", file=sys.stderr)
        return e.exit_code
    except Exception:
        log.exception("internal error")
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
