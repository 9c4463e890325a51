"""
Field LU - Determinant by Gaussian elimination with divisions.
"""
import logging
from typing import Optional

from ..exceptions import UsageError
from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement

logger = logging.getLogger(__name__)


def require_field(ring: Ring, algorithm: str) -> None:
    """Raise UsageError unless the ring is a field."""
    if not ring.is_field:
        raise UsageError(f"{algorithm} divides by pivots and needs a field, not {ring!r}")


def field_lu_det(a: Matrix, counter: Optional[OpCounter] = None) -> RingElement:
    """
    Determinant as the signed product of LU pivots.

    Zero tests are exact, so the first nonzero entry of the column is a
    sound pivot.

    Args:
        a: Square matrix over a field
        counter: Operation counter (a fresh one if omitted)

    Returns:
        det(a)

    Raises:
        UsageError: The ring is not a field
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    require_field(ring, "LU")

    rows = a.rows()
    det = ring.one
    for k in range(n):
        pivot_index = next((i for i in range(k, n) if not ring.is_zero(rows[i][k])), None)
        if pivot_index is None:
            return ring.zero
        if pivot_index != k:
            rows[k], rows[pivot_index] = rows[pivot_index], rows[k]
            det = ring.neg(det)

        pivot = rows[k][k]
        det = ring.mul(det, pivot)
        for i in range(k + 1, n):
            if ring.is_zero(rows[i][k]):
                continue
            factor = ring.divexact(rows[i][k], pivot)
            row, pivot_row = rows[i], rows[k]
            for j in range(k + 1, n):
                row[j] = ring.sub(row[j], ring.mul(factor, pivot_row[j]))
            row[k] = ring.zero
            counter.record(mul=n - k - 1, add=n - k - 1, divexact=1)
        counter.record(mul=1)

    logger.debug(f"field_lu_det: n={n} ring={ring!r}")
    return det
