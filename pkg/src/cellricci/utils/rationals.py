"""Exact rational helpers shared by the transport, curvature and CLI layers."""

from fractions import Fraction
from typing import Union

from cellricci.exceptions import InvalidParameterError

Number = Union[int, float, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or an integer / finite decimal) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParameterError(f"not a rational number: {text!r}") from e


def parse_alpha(text: str) -> Fraction:
    """Parse a laziness parameter and check it lies in [0, 1]."""
    alpha = parse_rational(text)
    check_alpha(alpha)
    return alpha


def check_alpha(alpha: Fraction, allow_one: bool = True) -> None:
    if alpha < 0 or alpha > 1 or (not allow_one and alpha == 1):
        bound = "1]" if allow_one else "1)"
        raise InvalidParameterError(f"alpha={alpha} outside [0, {bound}")


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` (integers keep the ``/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Number, places: int = 12) -> str:
    """Fixed-point rendering; exact for Fractions, rounding only at the last place."""
    if isinstance(value, Fraction):
        scaled = round(value * 10**places)
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled)).rjust(places + 1, "0")
        return f"{sign}{digits[:-places]}.{digits[-places:]}"
    text = f"{float(value):.{places}f}"
    return "0." + "0" * places if text == "-0." + "0" * places else text


__all__ = [
    "Number",
    "parse_rational",
    "parse_alpha",
    "check_alpha",
    "format_rational",
    "format_decimal",
]
