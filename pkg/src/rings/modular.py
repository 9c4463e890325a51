"""
Integers modulo m - Residue rings Z/mZ, fields when m is prime.
"""
from math import gcd
from operator import mul
from typing import Iterable

from ..exceptions import CharacteristicError, InexactDivisionError, UsageError
from ..schemas.ring import RingKind, RingSpec
from .base import Ring, ElementText, parse_decimal


_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """
    Miller-Rabin with the first twelve prime bases.

    Deterministic for m < 3.3e24; beyond that a composite passing all twelve
    bases is astronomically unlikely.
    """
    if m < 2:
        return False
    for p in _WITNESSES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class IntegerModRing(Ring):
    """
    Z/mZ with canonical residues in [0, m).

    Need not be a domain: IntegerModRing(6) has zero divisors, which the
    division-free algorithms handle and the elimination algorithms reject.
    """

    kind = RingKind.INTEGERS_MOD

    def __init__(self, modulus: int):
        """
        Initialize residue ring.

        Args:
            modulus: Modulus m >= 2
        """
        if modulus < 2:
            raise UsageError(f"modulus must be >= 2, got {modulus}")
        self.modulus = int(modulus)
        self._prime = is_prime(self.modulus)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_integral_domain(self) -> bool:
        return self._prime

    @property
    def is_field(self) -> bool:
        return self._prime

    @property
    def spec(self) -> RingSpec:
        return RingSpec(kind=self.kind, modulus=str(self.modulus))

    def contains(self, a) -> bool:
        return type(a) is int and 0 <= a < self.modulus

    def from_int(self, k: int) -> int:
        return int(k) % self.modulus

    def _add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def _sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def _mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def _neg(self, a: int) -> int:
        return -a % self.modulus

    def _divexact_small(self, a: int, k: int) -> int:
        if gcd(k, self.modulus) != 1:
            raise CharacteristicError(k, modulus=self.modulus)
        return a * pow(k, -1, self.modulus) % self.modulus

    def _divexact(self, a: int, b: int) -> int:
        if gcd(b, self.modulus) != 1:
            raise InexactDivisionError(f"{b} is not invertible modulo {self.modulus}")
        return a * pow(b, -1, self.modulus) % self.modulus

    def first_bad_divisor(self, n: int) -> int:
        # The smallest k > 1 sharing a factor with m is m's least prime factor.
        for k in range(2, n + 1):
            if gcd(k, self.modulus) != 1:
                return k
        return 0

    def dot(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        return sum(map(mul, xs, ys)) % self.modulus

    def sum(self, xs: Iterable[int]) -> int:
        return sum(xs) % self.modulus

    def parse(self, text: ElementText) -> int:
        if not isinstance(text, str):
            raise ValueError(f"expected a decimal residue, got {text!r}")
        return parse_decimal(text) % self.modulus

    def format(self, a: int) -> str:
        return str(a)

    def __repr__(self) -> str:
        return f"IntegersMod({self.modulus})"
