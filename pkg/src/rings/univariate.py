"""
Univariate polynomials over an arbitrary ring, as ascending coefficient lists.

These helpers back the cofactor-expansion oracle and the Hessenberg
recurrence. Lists are not stripped: lengths follow the degrees the callers
expect (a charpoly of size n always has n + 1 coefficients).
"""
from typing import List, Sequence

from .base import Ring, RingElement

Poly = List[RingElement]


def poly_add(ring: Ring, p: Sequence[RingElement], q: Sequence[RingElement]) -> Poly:
    """p + q, padded to the longer length."""
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = ring.add(out[i], c)
    return out


def poly_sub(ring: Ring, p: Sequence[RingElement], q: Sequence[RingElement]) -> Poly:
    """p - q, padded to the longer length."""
    return poly_add(ring, p, poly_neg(ring, q))


def poly_neg(ring: Ring, p: Sequence[RingElement]) -> Poly:
    return [ring.neg(c) for c in p]


def poly_scale(ring: Ring, c: RingElement, p: Sequence[RingElement]) -> Poly:
    """c·p."""
    return [ring.mul(c, x) for x in p]


def poly_shift(ring: Ring, p: Sequence[RingElement]) -> Poly:
    """x·p."""
    return [ring.zero] + list(p)


def poly_mul(ring: Ring, p: Sequence[RingElement], q: Sequence[RingElement]) -> Poly:
    """
    Schoolbook product.

    Args:
        ring: Coefficient ring
        p: Ascending coefficients
        q: Ascending coefficients

    Returns:
        Ascending coefficients of length len(p) + len(q) - 1 (empty if either is empty)
    """
    if not p or not q:
        return []
    out = [ring.zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if ring.is_zero(x):
            continue
        for j, y in enumerate(q):
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return out

