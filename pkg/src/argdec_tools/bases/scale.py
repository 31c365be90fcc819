"""The commensurate valuation scale: exact rationals in [0, 1] with n(x) = 1 - x."""

from collections.abc import Iterable
from fractions import Fraction

from argdec_tools.errors import ScaleError

ScaleValue = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def order_reverse(a: ScaleValue) -> ScaleValue:
    """The order-reversing map n of the scale: n(0) = 1, n(1) = 0."""
    return ONE - a


def parse_weight(text: str) -> ScaleValue:
    """Read a decimal (``0.6``) or fraction (``3/5``) weight exactly.

    Raises:
        ScaleError: If the text is not a number or lies outside [0, 1].
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as error:
        raise ScaleError(f"Not a weight: {text.strip()!r}") from error
    if not ZERO <= value <= ONE:
        raise ScaleError(f"Weight {text.strip()} lies outside [0, 1]")
    return value


def format_value(value: ScaleValue) -> str:
    """Short human form: ``0``, ``1`` or ``p/q``."""
    return str(value)


def format_exact(value: ScaleValue) -> str:
    """Stable machine form, always ``p/q``."""
    return f"{value.numerator}/{value.denominator}"


def scale_grid(weights: Iterable[ScaleValue]) -> list[ScaleValue]:
    """Sorted values {0, 1} together with every weight and its reverse."""
    values = {ZERO, ONE}
    for weight in weights:
        values.add(weight)
        values.add(order_reverse(weight))
    return sorted(values)
