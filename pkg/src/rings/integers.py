"""
Integers - The ring Z over Python's arbitrary-precision int.
"""
from operator import mul
from typing import Iterable

from ..exceptions import InexactDivisionError
from ..schemas.ring import RingKind
from .base import Ring, ElementText, parse_decimal


class IntegerRing(Ring):
    """Z with elements represented as plain `int`."""

    kind = RingKind.INTEGERS

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def contains(self, a) -> bool:
        return type(a) is int

    def from_int(self, k: int) -> int:
        return int(k)

    def _add(self, a: int, b: int) -> int:
        return a + b

    def _sub(self, a: int, b: int) -> int:
        return a - b

    def _mul(self, a: int, b: int) -> int:
        return a * b

    def _neg(self, a: int) -> int:
        return -a

    def _divexact_small(self, a: int, k: int) -> int:
        return self._divexact(a, k)

    def _divexact(self, a: int, b: int) -> int:
        if b == 0:
            raise InexactDivisionError(f"division of {a} by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        return q

    def dot(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        return sum(map(mul, xs, ys))

    def sum(self, xs: Iterable[int]) -> int:
        return sum(xs)

    def parse(self, text: ElementText) -> int:
        if not isinstance(text, str):
            raise ValueError(f"expected a decimal string, got {text!r}")
        return parse_decimal(text)

    def format(self, a: int) -> str:
        return str(a)

    def __repr__(self) -> str:
        return "Integers"
