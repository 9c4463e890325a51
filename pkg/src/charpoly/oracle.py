"""
Cofactor oracle - det(xI - A) by expansion along the first row.

Used as ground truth in tests. Arithmetic happens in R[x], so the oracle
works over every ring, including those with zero divisors.
"""
import logging
from typing import Dict, List, Sequence

from ..exceptions import UsageError
from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement
from ..rings.univariate import poly_add, poly_mul, poly_neg

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 8


def _char_matrix(a: Matrix) -> List[List[List[RingElement]]]:
    """Entries of xI - A as ascending polynomials."""
    ring, n = a.ring, a.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = ring.neg(a[i, j])
            row.append([c, ring.one] if i == j else [c])
        out.append(row)
    return out


def _det(ring: Ring,
         entries: Sequence[Sequence[List[RingElement]]],
         row: int,
         columns: int,
         memo: Dict[int, List[RingElement]]) -> List[RingElement]:
    """Minor on rows row..n-1 and the columns set in the bitmask."""
    if row == len(entries):
        return [ring.one]
    if columns in memo:
        return memo[columns]

    total: List[RingElement] = [ring.zero]
    position = 0
    for j in range(len(entries)):
        if not columns & (1 << j):
            continue
        term = poly_mul(ring, entries[row][j], _det(ring, entries, row + 1, columns & ~(1 << j), memo))
        total = poly_add(ring, total, term if position % 2 == 0 else poly_neg(ring, term))
        position += 1

    memo[columns] = total
    return total


def charpoly_oracle(a: Matrix) -> List[RingElement]:
    """
    Characteristic polynomial by cofactor expansion.

    Args:
        a: Square matrix over any ring, n <= ORACLE_MAX_N

    Returns:
        Ascending coefficients c_0..c_n, monic

    Raises:
        UsageError: n exceeds ORACLE_MAX_N
    """
    ring, n = a.ring, a.n
    if n > ORACLE_MAX_N:
        raise UsageError(f"cofactor oracle is limited to n <= {ORACLE_MAX_N}, got n = {n}")

    memo: Dict[int, List[RingElement]] = {}
    coeffs = _det(ring, _char_matrix(a), 0, (1 << n) - 1, memo)
    logger.debug(f"charpoly_oracle: n={n} ring={ring!r} minors={len(memo)}")
    coeffs = coeffs + [ring.zero] * (n + 1 - len(coeffs))
    return coeffs[:n + 1]
