"""
Rings package - Commutative rings the algorithms are generic over.
"""
from .base import Ring, RingElement, parse_decimal
from .integers import IntegerRing
from .rationals import RationalField
from .modular import IntegerModRing, is_prime
from .polynomials import IntegerPolynomialRing
from .factory import make_ring
from .univariate import poly_add, poly_sub, poly_neg, poly_mul, poly_scale, poly_shift

__all__ = [
    "Ring",
    "RingElement",
    "parse_decimal",
    "IntegerRing",
    "RationalField",
    "IntegerModRing",
    "IntegerPolynomialRing",
    "is_prime",
    "make_ring",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_mul",
    "poly_scale",
    "poly_shift",
]
