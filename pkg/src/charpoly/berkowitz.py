"""
Berkowitz - Division-free characteristic polynomial over any commutative ring.
"""
import logging
from typing import List, Optional

from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix
from ..rings.base import RingElement
from .output import CharOutput

logger = logging.getLogger(__name__)


def berkowitz(a: Matrix, counter: Optional[OpCounter] = None) -> CharOutput:
    """
    Samuelson-Berkowitz iteration over the leading principal submatrices.

    For the r×r leading block split as [[M, C], [R, a_rr]], the charpoly
    coefficients (descending) of the block are T·v, where v holds those of M
    and T is the (r+1)×r lower-triangular Toeplitz matrix with first column
    (1, -a_rr, -R·C, -R·M·C, ..., -R·M^{r-2}·C). The column is built with one
    matrix-vector product per entry, so no power of M is ever formed.

    Args:
        a: Square matrix over any commutative ring (no division is performed)
        counter: Operation counter (a fresh one if omitted)

    Returns:
        CharOutput without adjugate
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    if n == 0:
        return CharOutput(coeffs=[ring.one], det=ring.one)

    rows = a.rows()
    dot = ring.dot
    vector: List[RingElement] = [ring.one]

    for r in range(1, n + 1):
        s = r - 1  # size of M
        corner_row = rows[s][:s]
        column = [rows[i][s] for i in range(s)]

        toeplitz = [ring.one, ring.neg(rows[s][s])]
        w = column
        for step in range(s):
            toeplitz.append(ring.neg(dot(corner_row, w)))
            counter.record(mul=s, add=s)
            if step < s - 1:
                w = [dot(rows[i][:s], w) for i in range(s)]
                counter.record(mul=s * s, add=s * s)

        # (r+1)×r Toeplitz matrix times the previous coefficient vector
        vector = [
            dot([toeplitz[i - j] for j in range(min(i, s) + 1)], vector[:min(i, s) + 1])
            for i in range(r + 1)
        ]
        counter.record(mul=r * (r + 1) // 2, add=r * (r + 1) // 2)

    coeffs = vector[::-1]
    logger.debug(f"berkowitz: n={n} ring={ring!r} ring_mul={counter.ring_mul}")
    return CharOutput.from_coeffs(ring, coeffs)
