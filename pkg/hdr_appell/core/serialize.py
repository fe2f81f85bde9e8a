"""
JSON codec for polynomials, labels, Gram matrices and Taylor expansions.

Rationals are written as lowest-terms strings ``"p/q"`` (``"p"`` when q = 1),
so every value survives a round trip exactly. :func:`dumps` sorts keys, so
equal objects serialize to identical bytes.
"""

import json
from typing import Any, Dict, List, Sequence

from ..exceptions import DomainError
from .ball import GramMatrix
from .bases import BasisLabel
from .clifford import Multivector
from .mvpoly import MVPoly
from .scalars import Scalar, format_rational, parse_rational, real_imag, scalar


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def scalar_to_json(field: str, value: Scalar) -> Dict[str, str]:
    re, im = real_imag(field, value)
    return {"re": format_rational(re), "im": format_rational(im)}


def scalar_from_json(field: str, data: Dict[str, str]) -> Scalar:
    try:
        return scalar(field, parse_rational(data["re"]), parse_rational(data.get("im", "0")))
    except (KeyError, TypeError) as e:
        raise DomainError(f"Malformed scalar {data!r}") from e


def multivector_to_json(value: Multivector) -> List[Dict[str, Any]]:
    return [
        {"indices": list(blade), **scalar_to_json(value.field, coeff)}
        for blade, coeff in value.sorted_terms()
    ]


def multivector_from_json(m: int, field: str, data: List[Dict[str, Any]]) -> Multivector:
    try:
        terms = {tuple(entry["indices"]): scalar_from_json(field, entry) for entry in data}
    except (KeyError, TypeError) as e:
        raise DomainError(f"Malformed multivector {data!r}") from e
    return Multivector(m, field, terms)


def poly_terms_to_json(p: MVPoly) -> List[Dict[str, Any]]:
    return [
        {"monomial": list(monomial), "blades": multivector_to_json(p.terms[monomial])}
        for monomial in sorted(p.terms)
    ]


def poly_to_json(p: MVPoly) -> Dict[str, Any]:
    """
    Encode a polynomial.

    Example:
        >>> poly_to_json(MVPoly.variable(2, "real", 1))["terms"]
        [{'monomial': [1, 0], 'blades': [{'indices': [], 're': '1', 'im': '0'}]}]
    """
    return {"m": p.dim, "field": p.field, "terms": poly_terms_to_json(p)}


def poly_from_json(data: Dict[str, Any]) -> MVPoly:
    """
    Decode :func:`poly_to_json` output (or a basis element carrying the same
    keys).

    Raises:
        DomainError: If the document is malformed.
    """
    try:
        m, field, terms = int(data["m"]), data["field"], data["terms"]
        return MVPoly(
            m,
            field,
            {
                tuple(term["monomial"]): multivector_from_json(m, field, term["blades"])
                for term in terms
            },
        )
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, DomainError):
            raise
        raise DomainError(f"Malformed polynomial document: {e}") from e


def label_to_json(label: BasisLabel) -> Dict[str, Any]:
    return {
        "m": label.m,
        "field": label.field,
        "s": label.s,
        "k": label.k,
        "nu": list(label.nu),
        "mu": list(label.mu),
    }


def label_from_json(data: Dict[str, Any]) -> BasisLabel:
    try:
        return BasisLabel(
            int(data["m"]),
            data["field"],
            int(data["s"]),
            int(data["k"]),
            tuple(data["nu"]),
            tuple(data["mu"]),
        )
    except (KeyError, TypeError) as e:
        raise DomainError(f"Malformed label {data!r}") from e


def element_to_json(label: BasisLabel, poly: MVPoly, norm2: Scalar, **extra: Any) -> Dict[str, Any]:
    """A basis element: its label, squared norm and terms."""
    re, _ = real_imag(poly.field, norm2)
    return {
        **label_to_json(label),
        "norm2": format_rational(re),
        "terms": poly_terms_to_json(poly),
        **extra,
    }


def gram_to_json(gram: GramMatrix) -> Dict[str, Any]:
    """
    Dense Gram matrix as rational strings; complex matrices carry the
    imaginary parts in ``entries_im``.
    """
    out: Dict[str, Any] = {
        "m": gram.m,
        "field": gram.field,
        "pi_power": gram.pi_power,
        "size": gram.size,
        "entries": [
            [format_rational(real_imag(gram.field, v)[0]) for v in row] for row in gram.entries
        ],
    }
    if gram.field == "complex":
        out["entries_im"] = [
            [format_rational(real_imag(gram.field, v)[1]) for v in row] for row in gram.entries
        ]
    return out


def taylor_to_json(coefficients: Sequence, field: str) -> List[Dict[str, Any]]:
    out = []
    for coefficient in coefficients:
        out.append(
            {
                "label": label_to_json(coefficient.label),
                **scalar_to_json(field, coefficient.value),
                "chain_value": multivector_to_json(coefficient.chain_value),
                "chain_agrees": coefficient.chain_agrees,
            }
        )
    return out


def report_to_json(report) -> Dict[str, Any]:
    """A verification report; witness polynomials are encoded in full."""
    failures = []
    for failure in report.failures:
        entry: Dict[str, Any] = {"check": failure.check, "detail": failure.detail}
        if isinstance(failure.witness, MVPoly):
            entry["witness"] = poly_to_json(failure.witness)
        failures.append(entry)
    return {
        "suite": report.suite,
        "params": report.params,
        "checks": report.checks,
        "passed": report.passed,
        "failures": failures,
        "data": report.data,
    }
