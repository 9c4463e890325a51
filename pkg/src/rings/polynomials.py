"""
Polynomials over Z - Dense univariate polynomial ring Z[t].
"""
from typing import Iterable, List, Sequence, Tuple

from ..exceptions import InexactDivisionError
from ..schemas.ring import RingKind
from .base import Ring, ElementText, parse_decimal

IntPoly = Tuple[int, ...]


def _strip(coeffs: List[int]) -> IntPoly:
    """Drop trailing zero coefficients (the zero polynomial is the empty tuple)."""
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class IntegerPolynomialRing(Ring):
    """
    Z[t] with elements stored as ascending coefficient tuples.

    Canonical form has no trailing zero coefficient, so equal polynomials are
    equal tuples. Entry growth under repeated multiplication is what makes
    this ring interesting for comparing the characteristic polynomial
    algorithms.
    """

    kind = RingKind.POLY_OVER_INTEGERS

    @property
    def zero(self) -> IntPoly:
        return ()

    @property
    def one(self) -> IntPoly:
        return (1,)

    def contains(self, a) -> bool:
        return (type(a) is tuple
                and (not a or a[-1] != 0)
                and all(type(c) is int for c in a))

    def from_int(self, k: int) -> IntPoly:
        return (int(k),) if k else ()

    def from_coefficients(self, coeffs: Iterable[int]) -> IntPoly:
        """Canonical polynomial from ascending integer coefficients."""
        return _strip([int(c) for c in coeffs])

    def degree(self, a: IntPoly) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(a) - 1

    def _add(self, a: IntPoly, b: IntPoly) -> IntPoly:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return _strip(out)

    def _sub(self, a: IntPoly, b: IntPoly) -> IntPoly:
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return _strip(out)

    def _mul(self, a: IntPoly, b: IntPoly) -> IntPoly:
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # Leading coefficients are nonzero integers, so no stripping is needed.
        return tuple(out)

    def _neg(self, a: IntPoly) -> IntPoly:
        return tuple(-c for c in a)

    def _divexact_small(self, a: IntPoly, k: int) -> IntPoly:
        out = []
        for c in a:
            q, r = divmod(c, k)
            if r:
                raise InexactDivisionError(f"coefficient {c} is not divisible by {k}")
            out.append(q)
        return tuple(out)

    def _divexact(self, a: IntPoly, b: IntPoly) -> IntPoly:
        if not b:
            raise InexactDivisionError("division by the zero polynomial")
        if not a:
            return ()
        if len(a) < len(b):
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        rem = list(a)
        lead = b[-1]
        quot = [0] * (len(a) - len(b) + 1)
        for i in range(len(quot) - 1, -1, -1):
            q, r = divmod(rem[i + len(b) - 1], lead)
            if r:
                raise InexactDivisionError(f"{a} is not divisible by {b}")
            quot[i] = q
            if q:
                for j, c in enumerate(b):
                    rem[i + j] -= q * c
        if any(rem):
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        return tuple(quot)

    def dot(self, xs: Iterable[IntPoly], ys: Iterable[IntPoly]) -> IntPoly:
        acc: List[int] = []
        for a, b in zip(xs, ys):
            if not a or not b:
                continue
            width = len(a) + len(b) - 1
            if len(acc) < width:
                acc.extend([0] * (width - len(acc)))
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        acc[i + j] += x * y
        return _strip(acc)

    def parse(self, text: ElementText) -> IntPoly:
        if isinstance(text, str) or not isinstance(text, Sequence):
            raise ValueError(f"expected an array of decimal coefficients, got {text!r}")
        return _strip([parse_decimal(str(c)) for c in text])

    def format(self, a: IntPoly) -> List[str]:
        return [str(c) for c in a]

    def __repr__(self) -> str:
        return "PolyOverIntegers"
