"""
Ring - Abstract commutative ring with exact division by small integers.
"""
import re
from abc import ABC, abstractmethod
from typing import Any, Iterable, Sequence, Tuple, Union

from ..exceptions import CharacteristicError, RingMismatchError
from ..schemas.ring import RingKind, RingSpec

# Elements are plain Python values (int, Fraction, tuple); the ring that
# interprets them is always passed alongside.
RingElement = Any
ElementText = Union[str, Sequence[str]]

_DECIMAL = re.compile(r"[+-]?[0-9]+")


def parse_decimal(text: str) -> int:
    """Optional-sign ASCII decimal integer; underscores and other digit scripts are rejected."""
    token = text.strip()
    if not _DECIMAL.fullmatch(token):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(token)


class Ring(ABC):
    """
    Descriptor of a commutative ring with unit.

    Elements carry no reference to their ring. Every public operation checks
    that its operands are canonical members of this ring and raises
    RingMismatchError otherwise. `dot` is the unchecked kernel used by the
    matrix code, whose entries are validated once at construction.
    """

    kind: RingKind

    # ===== Ring structure =====

    @property
    @abstractmethod
    def zero(self) -> RingElement:
        """Additive identity."""

    @property
    @abstractmethod
    def one(self) -> RingElement:
        """Multiplicative identity."""

    @property
    def characteristic(self) -> int:
        """Smallest k > 0 with k·1 = 0, or 0."""
        return 0

    @property
    def is_integral_domain(self) -> bool:
        return True

    @property
    def is_field(self) -> bool:
        return False

    @property
    def spec(self) -> RingSpec:
        return RingSpec(kind=self.kind)

    @property
    def label(self) -> str:
        return self.spec.label

    @abstractmethod
    def contains(self, a: RingElement) -> bool:
        """True if `a` is a canonical element of this ring."""

    @abstractmethod
    def from_int(self, k: int) -> RingElement:
        """Image of the integer k under Z -> R."""

    # ===== Arithmetic hooks (operands already checked) =====

    @abstractmethod
    def _add(self, a: RingElement, b: RingElement) -> RingElement: ...

    @abstractmethod
    def _sub(self, a: RingElement, b: RingElement) -> RingElement: ...

    @abstractmethod
    def _mul(self, a: RingElement, b: RingElement) -> RingElement: ...

    @abstractmethod
    def _neg(self, a: RingElement) -> RingElement: ...

    @abstractmethod
    def _divexact_small(self, a: RingElement, k: int) -> RingElement: ...

    @abstractmethod
    def _divexact(self, a: RingElement, b: RingElement) -> RingElement: ...

    # ===== Text encoding =====

    @abstractmethod
    def parse(self, text: ElementText) -> RingElement:
        """Parse the text encoding of an element (raises ValueError)."""

    @abstractmethod
    def format(self, a: RingElement) -> ElementText:
        """Text encoding of an element."""

    # ===== Checked operations =====

    def check(self, *elements: RingElement) -> None:
        """Raise RingMismatchError unless every element belongs to this ring."""
        for a in elements:
            if not self.contains(a):
                raise RingMismatchError(f"{a!r} is not a canonical element of {self!r}")

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        self.check(a, b)
        return self._add(a, b)

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        self.check(a, b)
        return self._sub(a, b)

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        self.check(a, b)
        return self._mul(a, b)

    def neg(self, a: RingElement) -> RingElement:
        self.check(a)
        return self._neg(a)

    def equals(self, a: RingElement, b: RingElement) -> bool:
        """Structural equality; valid because elements are kept canonical."""
        self.check(a, b)
        return a == b

    def is_zero(self, a: RingElement) -> bool:
        return a == self.zero

    def divexact_small(self, a: RingElement, k: int) -> RingElement:
        """
        Divide exactly by a small positive integer.

        Args:
            a: Ring element known to be a multiple of k
            k: Positive machine integer (in practice 1..n)

        Returns:
            The unique x with k·x = a

        Raises:
            InexactDivisionError: a is not divisible by k
            CharacteristicError: k is not invertible in the ring
        """
        self.check(a)
        if k < 1:
            raise ValueError(f"divisor must be positive, got {k}")
        if k == 1:
            return a
        return self._divexact_small(a, k)

    def divexact(self, a: RingElement, b: RingElement) -> RingElement:
        """Exact division by a ring element (Bareiss, field elimination)."""
        self.check(a, b)
        return self._divexact(a, b)

    # ===== Small-integer divisibility =====

    def first_bad_divisor(self, n: int) -> int:
        """Smallest k in 1..n that cannot be divided by exactly, or 0 if none."""
        return 0

    def characteristic_ok(self, n: int) -> bool:
        """
        True iff exact division by every k in 1..n is defined.

        Args:
            n: Matrix size (>= 1)
        """
        return self.first_bad_divisor(n) == 0

    def require_characteristic(self, n: int) -> None:
        """Raise CharacteristicError naming the first bad divisor, if any."""
        k = self.first_bad_divisor(n)
        if k:
            raise CharacteristicError(k, modulus=self.characteristic or None, n=n)

    # ===== Kernels =====

    def dot(self, xs: Iterable[RingElement], ys: Iterable[RingElement]) -> RingElement:
        """Sum of products of two equally long sequences (no membership checks)."""
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self._add(acc, self._mul(x, y))
        return acc

    def sum(self, xs: Iterable[RingElement]) -> RingElement:
        acc = self.zero
        for x in xs:
            acc = self._add(acc, x)
        return acc

    # ===== Descriptor identity =====

    @property
    def key(self) -> Tuple[str, int]:
        return (self.kind.value, self.characteristic)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)
