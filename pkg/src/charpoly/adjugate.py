"""
Adjugate from the characteristic polynomial (Cayley-Hamilton).
"""
from typing import Optional, Sequence

from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix, mat_mul, mat_neg, add_scalar_diag
from ..rings.base import RingElement


def adjugate_from_charpoly(a: Matrix,
                           coeffs: Sequence[RingElement],
                           counter: Optional[OpCounter] = None) -> Matrix:
    """
    adj(A) = (-1)^{n-1} (A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I), by Horner.

    Gives an adjugate to algorithms that only produce the coefficients. The
    result is only as good as `coeffs`; callers verify A·X = det·I.

    Args:
        a: Square matrix, n >= 1
        coeffs: Ascending charpoly coefficients of `a`
        counter: Receives n - 2 full matmuls (n >= 2)

    Returns:
        Adjugate matrix
    """
    ring, n = a.ring, a.n
    if n == 0:
        return Matrix.zero(ring, 0)
    if n == 1:
        return Matrix.identity(ring, 1)

    x = add_scalar_diag(a, coeffs[n - 1], counter)
    for k in range(n - 2, 0, -1):
        x = add_scalar_diag(mat_mul(a, x, counter), coeffs[k], counter)

    return x if n % 2 == 1 else mat_neg(x)
