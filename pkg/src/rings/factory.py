"""
Ring factory - Build ring descriptors from their serialized form.
"""
from typing import Union

from ..schemas.ring import RingKind, RingSpec
from .base import Ring
from .integers import IntegerRing
from .rationals import RationalField
from .modular import IntegerModRing
from .polynomials import IntegerPolynomialRing


def make_ring(spec: Union[RingSpec, str]) -> Ring:
    """
    Create a ring from a RingSpec or a flag string such as "intmod:7".

    Args:
        spec: Ring descriptor

    Returns:
        Ring instance
    """
    if isinstance(spec, str):
        spec = RingSpec.parse_flag(spec)

    if spec.kind == RingKind.INTEGERS:
        return IntegerRing()
    if spec.kind == RingKind.RATIONALS:
        return RationalField()
    if spec.kind == RingKind.INTEGERS_MOD:
        return IntegerModRing(spec.modulus_value)
    return IntegerPolynomialRing()
