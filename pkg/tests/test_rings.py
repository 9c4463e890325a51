"""
Tests for the coefficient rings.
"""
import random
from fractions import Fraction

import pytest

from src.exceptions import (
    CharacteristicError, InexactDivisionError, RingMismatchError, UsageError,
)
from src.rings import (
    IntegerModRing, IntegerPolynomialRing, IntegerRing, RationalField, is_prime, make_ring,
)


def _draw(ring, rng: random.Random):
    """Random element with small entries."""
    if isinstance(ring, IntegerPolynomialRing):
        return ring.from_coefficients(rng.randint(-9, 9) for _ in range(rng.randint(0, 3)))
    if isinstance(ring, RationalField):
        return Fraction(rng.randint(-20, 20), rng.randint(1, 7))
    return ring.from_int(rng.randint(-1000, 1000))


class TestRingAxioms:
    """Commutative ring laws on random triples."""

    def test_laws_hold_on_random_triples(self, any_ring):
        """Test associativity, commutativity, distributivity and identities."""
        ring = any_ring
        rng = random.Random(20240601)
        for _ in range(1000):
            a, b, c = (_draw(ring, rng) for _ in range(3))
            assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
            assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
            assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
            assert ring.add(a, ring.zero) == a
            assert ring.mul(a, ring.one) == a
            assert ring.is_zero(ring.add(a, ring.neg(a)))
            assert ring.sub(a, b) == ring.add(a, ring.neg(b))

    def test_divexact_small_inverts_scaling(self, any_ring):
        """Test (k·a) / k == a for k in 1..12."""
        ring = any_ring
        rng = random.Random(7)
        for _ in range(200):
            a = _draw(ring, rng)
            for k in range(1, 13):
                if not ring.characteristic_ok(k):
                    continue
                assert ring.divexact_small(ring.mul(ring.from_int(k), a), k) == a

    def test_results_are_canonical(self, any_ring):
        """Test re-canonicalizing any operation result leaves it unchanged."""
        ring = any_ring
        rng = random.Random(11)
        for _ in range(300):
            a, b = _draw(ring, rng), _draw(ring, rng)
            for x in (ring.add(a, b), ring.sub(a, b), ring.mul(a, b), ring.neg(a)):
                assert ring.contains(x)
                assert ring.parse(ring.format(x)) == x

    @pytest.mark.parametrize("token", ["1_000", "١٢", "0x10", "+", "", "1 2"])
    def test_rejects_non_decimal_text(self, any_ring, token):
        """Test element text must be an optional-sign ASCII decimal."""
        text = [token] if isinstance(any_ring, IntegerPolynomialRing) else token
        with pytest.raises(ValueError):
            any_ring.parse(text)

    def test_dot_matches_checked_operations(self, any_ring):
        """Test the unchecked dot kernel against add/mul."""
        ring = any_ring
        rng = random.Random(3)
        for _ in range(50):
            xs = [_draw(ring, rng) for _ in range(5)]
            ys = [_draw(ring, rng) for _ in range(5)]
            expected = ring.zero
            for x, y in zip(xs, ys):
                expected = ring.add(expected, ring.mul(x, y))
            assert ring.dot(xs, ys) == expected


class TestIntegers:
    """Tests for IntegerRing."""

    def test_divexact_small(self, integers):
        """Test exact division by small integers."""
        assert integers.divexact_small(12, 4) == 3
        assert integers.divexact_small(-12, 4) == -3
        assert integers.divexact_small(7, 1) == 7

    def test_inexact_division_raises(self, integers):
        """Test a nonzero remainder is a contract violation."""
        with pytest.raises(InexactDivisionError):
            integers.divexact_small(7, 2)
        with pytest.raises(InexactDivisionError):
            integers.divexact(7, 0)

    def test_divisor_must_be_positive(self, integers):
        """Test k < 1 is rejected."""
        with pytest.raises(ValueError):
            integers.divexact_small(4, 0)

    def test_characteristic_ok(self, integers):
        """Test characteristic 0 allows every n."""
        assert integers.characteristic == 0
        assert integers.characteristic_ok(1000)

    def test_parse_and_format(self, integers):
        """Test decimal encoding."""
        assert integers.parse(" -42 ") == -42
        assert integers.format(-42) == "-42"
        with pytest.raises(ValueError):
            integers.parse("1.5")

    def test_mismatched_operand(self, integers):
        """Test a Fraction is not an integer element."""
        with pytest.raises(RingMismatchError):
            integers.add(1, Fraction(1, 2))


class TestRationals:
    """Tests for RationalField."""

    def test_divexact_small(self, rationals):
        """Test division by k in Q."""
        assert rationals.divexact_small(Fraction(1), 3) == Fraction(1, 3)

    def test_parse(self, rationals):
        """Test p/q and p encodings."""
        assert rationals.parse("3/2") == Fraction(3, 2)
        assert rationals.parse("6/4") == Fraction(3, 2)
        assert rationals.parse("-5") == Fraction(-5)
        with pytest.raises(ValueError):
            rationals.parse("1/0")

    def test_format(self, rationals):
        """Test canonical encodings."""
        assert rationals.format(Fraction(3, 2)) == "3/2"
        assert rationals.format(Fraction(4, 2)) == "2"

    def test_is_field(self, rationals):
        """Test field flags and division by a unit."""
        assert rationals.is_field
        assert rationals.divexact(Fraction(1), Fraction(2, 3)) == Fraction(3, 2)

    def test_int_is_not_a_rational_element(self, rationals):
        """Test elements must be Fractions."""
        with pytest.raises(RingMismatchError):
            rationals.mul(2, Fraction(1))


class TestIntegersMod:
    """Tests for IntegerModRing."""

    def test_divexact_small_uses_inverse(self, mod101):
        """Test 1 / 2 mod 101 is 51."""
        assert mod101.divexact_small(1, 2) == 51

    def test_divexact_small_not_invertible(self, mod6):
        """Test dividing by 2 in Z/6Z raises CharacteristicError."""
        with pytest.raises(CharacteristicError) as exc_info:
            mod6.divexact_small(4, 2)
        assert exc_info.value.divisor == 2

    def test_characteristic_ok(self, mod6, mod101):
        """Test characteristic checks against 1..n."""
        assert mod6.characteristic_ok(1)
        assert not mod6.characteristic_ok(2)
        assert mod6.first_bad_divisor(5) == 2
        assert mod101.characteristic_ok(100)
        assert not mod101.characteristic_ok(101)

    def test_require_characteristic_names_divisor(self, mod6):
        """Test the error carries divisor and modulus."""
        with pytest.raises(CharacteristicError) as exc_info:
            mod6.require_characteristic(3)
        assert exc_info.value.divisor == 2
        assert exc_info.value.modulus == 6
        assert "2" in str(exc_info.value)

    def test_field_flags(self, mod6, mod101):
        """Test a prime modulus gives a field."""
        assert mod101.is_field and mod101.is_integral_domain
        assert not mod6.is_field and not mod6.is_integral_domain

    def test_parse_reduces(self):
        """Test 9 parses to 2 in Z/7Z."""
        ring = IntegerModRing(7)
        assert ring.parse("9") == 2
        assert ring.parse("-1") == 6

    def test_bad_modulus(self):
        """Test moduli below 2 are rejected."""
        with pytest.raises(UsageError):
            IntegerModRing(1)

    def test_is_prime(self):
        """Test primality of a few moduli."""
        assert [m for m in range(2, 30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert is_prime(2 ** 61 - 1)
        assert not is_prime(561)


class TestPolynomials:
    """Tests for IntegerPolynomialRing."""

    def test_canonical_form(self, polyint):
        """Test trailing zeros are stripped."""
        assert polyint.from_coefficients([1, 2, 0, 0]) == (1, 2)
        assert polyint.from_coefficients([0, 0]) == ()
        assert not polyint.contains((1, 0))

    def test_mul(self, polyint):
        """Test (1 + x)(1 - x) = 1 - x²."""
        assert polyint.mul((1, 1), (1, -1)) == (1, 0, -1)

    def test_divexact_small(self, polyint):
        """Test coefficientwise division."""
        assert polyint.divexact_small((4, -6), 2) == (2, -3)
        with pytest.raises(InexactDivisionError):
            polyint.divexact_small((3, 4), 2)

    def test_divexact_by_polynomial(self, polyint):
        """Test exact long division."""
        assert polyint.divexact((1, 0, -1), (1, 1)) == (1, -1)
        with pytest.raises(InexactDivisionError):
            polyint.divexact((1, 0, 1), (1, 1))

    def test_parse_and_format(self, polyint):
        """Test arrays of decimal coefficients."""
        assert polyint.parse(["1", "0", "-2"]) == (1, 0, -2)
        assert polyint.format((1, 0, -2)) == ["1", "0", "-2"]
        with pytest.raises(ValueError):
            polyint.parse("3")


class TestFactory:
    """Tests for make_ring."""

    def test_from_flag(self):
        """Test flag strings build the right rings."""
        assert isinstance(make_ring("int"), IntegerRing)
        assert isinstance(make_ring("rational"), RationalField)
        assert make_ring("intmod:7") == IntegerModRing(7)
        assert isinstance(make_ring("polyint"), IntegerPolynomialRing)

    def test_label_round_trip(self):
        """Test labels rebuild the same ring."""
        for label in ("int", "rational", "intmod:101", "polyint"):
            assert make_ring(label).label == label

    def test_rings_compare_by_kind_and_modulus(self):
        """Test descriptor equality."""
        assert IntegerModRing(7) != IntegerModRing(11)
        assert IntegerRing() != RationalField()
