"""
Faddeev-Leverrier - Characteristic polynomial from the traces of A·B_k.
"""
import logging
from typing import Optional

from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix, mat_mul, mat_neg, product_trace, trace, add_scalar_diag
from .output import CharOutput

logger = logging.getLogger(__name__)


def faddeev_leverrier(a: Matrix, counter: Optional[OpCounter] = None) -> CharOutput:
    """
    Characteristic polynomial, determinant and adjugate in n - 1 matrix products.

    Runs the recursion c_{n-k} = -(1/k) Tr(A·B_{k-1}), B_k = A·B_{k-1} + c_{n-k} I
    starting from B_0 = I. The last trace is a product trace, so A·B_{n-1} is
    never formed, and B_{n-1} = (-1)^{n+1} adj(A).

    Args:
        a: Square matrix; the ring must allow exact division by 1..n
        counter: Operation counter (a fresh one if omitted)

    Returns:
        CharOutput with adjugate

    Raises:
        CharacteristicError: Some k <= n is not invertible in the ring
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    if n == 0:
        return CharOutput.empty(ring)
    ring.require_characteristic(n)

    coeffs = [ring.zero] * (n + 1)
    coeffs[n] = ring.one
    b = Matrix.identity(ring, n)

    for k in range(1, n):
        b = mat_mul(a, b, counter)
        c = ring.neg(ring.divexact_small(trace(b), k))
        counter.record(add=n, divexact=1)
        coeffs[n - k] = c
        b = add_scalar_diag(b, c, counter)

    coeffs[0] = ring.neg(ring.divexact_small(product_trace(a, b, counter), n))
    counter.record(divexact=1)

    # adj(A) = (-1)^{n+1} B_{n-1}
    adjugate = b if n % 2 == 1 else mat_neg(b)

    logger.debug(f"faddeev_leverrier: n={n} ring={ring!r} matmuls={counter.full_matmul}")
    return CharOutput.from_coeffs(ring, coeffs, adjugate=adjugate)
