"""
Coefficient fields: exact rationals and Gaussian rationals.

Scalars are plain elements of the sympy domains ``QQ`` (field tag ``"real"``,
the algebra R_{0,m}) and ``QQ_I`` (field tag ``"complex"``, the algebra C_m).
The domains keep every value in lowest terms with a positive denominator.
"""

from fractions import Fraction
from typing import Any, Tuple, Union

from sympy.polys.domains import QQ, QQ_I

from ..exceptions import DomainError

REAL = "real"
COMPLEX = "complex"
FIELDS = (REAL, COMPLEX)

# An element of QQ or QQ_I.
Scalar = Any
RationalLike = Union[int, str, Fraction, Any]


def check_field(field: str) -> str:
    """Validate a field tag and return it."""
    if field not in FIELDS:
        raise DomainError(f"Unknown field {field!r}; expected one of {FIELDS}")
    return field


def domain_of(field: str):
    """Return the sympy domain that holds scalars of ``field``."""
    return QQ_I if check_field(field) == COMPLEX else QQ


def parse_rational(text: str):
    """
    Parse ``"p/q"`` or ``"p"`` into an exact rational.

    Example:
        >>> parse_rational("-3/6")
        -1/2
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError) as e:
        raise DomainError(f"Not a rational number: {text!r}") from e
    return QQ(value.numerator, value.denominator)


def rational(value: RationalLike):
    """Coerce ints, fractions, ``"p/q"`` strings and QQ elements into QQ."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    try:
        return QQ.convert(value)
    except Exception as e:
        raise DomainError(f"Cannot use {value!r} as an exact rational") from e


def scalar(field: str, re: RationalLike = 0, im: RationalLike = 0) -> Scalar:
    """
    Build the exact scalar ``re + i*im`` of the given field.

    Raises:
        DomainError: If a real scalar is given a nonzero imaginary part.
    """
    re_q, im_q = rational(re), rational(im)
    if check_field(field) == REAL:
        if im_q:
            raise DomainError("Real scalars cannot carry an imaginary part")
        return re_q
    return QQ_I(re_q, im_q)


def coerce(field: str, value: Any) -> Scalar:
    """Bring ``value`` (int, rational or scalar of either field) into ``field``."""
    K = domain_of(field)
    if field == COMPLEX:
        if isinstance(value, QQ_I.dtype):
            return value
        return QQ_I(rational(value), QQ(0))
    if isinstance(value, QQ_I.dtype):
        if value.y:
            raise DomainError("Real scalars cannot carry an imaginary part")
        return value.x
    return K.convert(rational(value))


def conjugate(field: str, value: Scalar) -> Scalar:
    """Complex conjugate; the identity on real scalars."""
    return QQ_I(value.x, -value.y) if field == COMPLEX else value


def real_imag(field: str, value: Scalar) -> Tuple[Any, Any]:
    """Split a scalar into its rational real and imaginary parts."""
    if field == COMPLEX:
        return value.x, value.y
    return value, QQ(0)


def is_positive(field: str, value: Scalar) -> bool:
    """True when the scalar is a positive real number."""
    re, im = real_imag(field, value)
    return not im and re > 0


def format_rational(value) -> str:
    """Format a rational as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def imaginary_unit():
    """The Gaussian rational i."""
    return QQ_I(0, 1)


def is_scalar_like(value: Any) -> bool:
    """True for values :func:`coerce` understands."""
    return isinstance(value, (int, str, Fraction, QQ.dtype, QQ_I.dtype))
