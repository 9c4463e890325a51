"""
Rationals - The field Q over `fractions.Fraction`.
"""
from fractions import Fraction
from operator import mul
from typing import Iterable

from ..exceptions import InexactDivisionError
from ..schemas.ring import RingKind
from .base import Ring, ElementText, parse_decimal

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RationalField(Ring):
    """
    Q with elements represented as `Fraction`.

    Fraction reduces to lowest terms with a positive denominator after every
    operation, so coefficient growth reflects the true size of the values.
    """

    kind = RingKind.RATIONALS

    @property
    def zero(self) -> Fraction:
        return _ZERO

    @property
    def one(self) -> Fraction:
        return _ONE

    @property
    def is_field(self) -> bool:
        return True

    def contains(self, a) -> bool:
        return type(a) is Fraction

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def _add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def _sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def _mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _neg(self, a: Fraction) -> Fraction:
        return -a

    def _divexact_small(self, a: Fraction, k: int) -> Fraction:
        return a / k

    def _divexact(self, a: Fraction, b: Fraction) -> Fraction:
        if not b:
            raise InexactDivisionError(f"division of {a} by zero")
        return a / b

    def dot(self, xs: Iterable[Fraction], ys: Iterable[Fraction]) -> Fraction:
        return sum(map(mul, xs, ys), _ZERO)

    def sum(self, xs: Iterable[Fraction]) -> Fraction:
        return sum(xs, _ZERO)

    def parse(self, text: ElementText) -> Fraction:
        if not isinstance(text, str):
            raise ValueError(f"expected 'p/q' or 'p', got {text!r}")
        num, sep, den = text.strip().partition("/")
        if not sep:
            return Fraction(parse_decimal(num))
        q = parse_decimal(den)
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(parse_decimal(num), q)

    def format(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self) -> str:
        return "Rationals"
