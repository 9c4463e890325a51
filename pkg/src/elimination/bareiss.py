"""
Bareiss - Fraction-free LU for determinants and adjugates over integral domains.
"""
import logging
from typing import Any, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import UsageError
from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement
from ..charpoly.berkowitz import berkowitz
from ..charpoly.adjugate import adjugate_from_charpoly

logger = logging.getLogger(__name__)


class FFLUResult(BaseModel):
    """Outcome of fraction-free elimination."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    det: Any
    permutation_sign: int = Field(default=1, description="+1 or -1")
    reduced: Matrix = Field(..., description="Working matrix after elimination")
    permutation: List[int] = Field(default_factory=list, description="Original index of each row")
    singular: bool = False


def _require_domain(ring: Ring) -> None:
    if not ring.is_integral_domain:
        raise UsageError(f"fraction-free elimination needs an integral domain, not {ring!r}")


def _eliminate(ring: Ring,
               rows: List[List[RingElement]],
               counter: OpCounter) -> Tuple[int, List[int], bool]:
    """
    Two-term Bareiss elimination in place on the first len(rows) columns.

    Each update (p·a_ij - a_ik·a_kj) / p_prev is an exact division by the
    previous pivot; the first previous pivot is 1.

    Returns:
        (permutation sign, row permutation, True if every pivot was nonzero)
    """
    n = len(rows)
    width = len(rows[0]) if rows else 0
    sign = 1
    perm = list(range(n))
    previous = ring.one

    for k in range(n):
        if ring.is_zero(rows[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(rows[i][k]):
                    rows[k], rows[i] = rows[i], rows[k]
                    perm[k], perm[i] = perm[i], perm[k]
                    sign = -sign
                    break
            else:
                return sign, perm, False

        pivot = rows[k][k]
        pivot_row = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            factor = row[k]
            for j in range(k + 1, width):
                row[j] = ring.divexact(
                    ring.sub(ring.mul(pivot, row[j]), ring.mul(factor, pivot_row[j])),
                    previous,
                )
            row[k] = ring.zero
            span = width - k - 1
            counter.record(mul=2 * span, add=span, divexact=span)
        previous = pivot

    return sign, perm, True


def bareiss_det(a: Matrix, counter: Optional[OpCounter] = None) -> FFLUResult:
    """
    Determinant by fraction-free Gaussian elimination.

    Args:
        a: Square matrix over an integral domain
        counter: Operation counter (a fresh one if omitted)

    Returns:
        FFLUResult; det is 0 when a column has no nonzero pivot

    Raises:
        UsageError: The ring has zero divisors
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    _require_domain(ring)

    rows = a.rows()
    sign, perm, nonsingular = _eliminate(ring, rows, counter)
    reduced = Matrix(ring, n, [x for row in rows for x in row], check=False)

    if n == 0:
        det = ring.one
    elif not nonsingular:
        det = ring.zero
    else:
        last = rows[n - 1][n - 1]
        det = last if sign > 0 else ring.neg(last)

    logger.debug(f"bareiss_det: n={n} ring={ring!r} sign={sign} singular={not nonsingular}")
    return FFLUResult(det=det, permutation_sign=sign, reduced=reduced,
                      permutation=perm, singular=not nonsingular)


def fflu_adjugate(a: Matrix, counter: Optional[OpCounter] = None) -> Tuple[RingElement, Matrix]:
    """
    Determinant and adjugate by solving A·X = det·I fraction-free.

    Bareiss runs on [A | I]; back substitution then stays in the ring because
    every quotient is an entry of the (integral) adjugate. A singular matrix
    has no solve path, so its adjugate comes from the Berkowitz coefficients.

    Args:
        a: Square matrix over an integral domain
        counter: Operation counter (a fresh one if omitted)

    Returns:
        (det, adj)
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    _require_domain(ring)
    if n == 0:
        return ring.one, Matrix.zero(ring, 0)

    one, zero = ring.one, ring.zero
    rows = [list(a.row(i)) + [one if j == i else zero for j in range(n)] for i in range(n)]
    sign, _, nonsingular = _eliminate(ring, rows, counter)

    if not nonsingular:
        logger.debug(f"fflu_adjugate: singular {n}×{n} input, using Berkowitz coefficients")
        coeffs = berkowitz(a, counter).coeffs
        return zero, adjugate_from_charpoly(a, coeffs, counter)

    last = rows[n - 1][n - 1]
    det = last if sign > 0 else ring.neg(last)

    entries = [zero] * (n * n)
    for col in range(n):
        x = [zero] * n
        for i in range(n - 1, -1, -1):
            row = rows[i]
            s = ring.mul(det, row[n + col])
            for j in range(i + 1, n):
                s = ring.sub(s, ring.mul(row[j], x[j]))
            x[i] = ring.divexact(s, row[i])
            counter.record(mul=n - i, add=n - i - 1, divexact=1)
        for i in range(n):
            entries[i * n + col] = x[i]

    return det, Matrix(ring, n, entries, check=False)
