"""
Hessenberg - Characteristic polynomial over a field via upper Hessenberg form.
"""
import logging
from typing import List, Optional

from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement
from ..rings.univariate import poly_scale, poly_shift, poly_sub
from ..charpoly.output import CharOutput
from .lu import require_field

logger = logging.getLogger(__name__)


def hessenberg_reduce(ring: Ring, h: List[List[RingElement]], counter: OpCounter) -> None:
    """
    Similarity transform to upper Hessenberg form, in place.

    Column j is cleared below the subdiagonal with multipliers entry / pivot;
    each row operation is paired with the inverse column operation so the
    characteristic polynomial is unchanged. A column with nothing to pivot on
    is already reduced.
    """
    n = len(h)
    for j in range(n - 2):
        pivot_index = next((i for i in range(j + 1, n) if not ring.is_zero(h[i][j])), None)
        if pivot_index is None:
            continue
        target = j + 1
        if pivot_index != target:
            h[pivot_index], h[target] = h[target], h[pivot_index]
            for row in h:
                row[pivot_index], row[target] = row[target], row[pivot_index]

        pivot = h[target][j]
        for r in range(j + 2, n):
            if ring.is_zero(h[r][j]):
                continue
            u = ring.divexact(h[r][j], pivot)
            h[r] = [ring.sub(x, ring.mul(u, y)) for x, y in zip(h[r], h[target])]
            for row in h:
                row[target] = ring.add(row[target], ring.mul(u, row[r]))
            counter.record(mul=2 * n, add=2 * n, divexact=1)


def hessenberg_charpoly(a: Matrix, counter: Optional[OpCounter] = None) -> CharOutput:
    """
    Characteristic polynomial by Hessenberg reduction and the leading-minor recurrence.

    With H upper Hessenberg (1-indexed), p_0 = 1 and
        p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (h_{i+1,i} ··· h_{k,k-1}) p_{i-1},
    and p_n is the characteristic polynomial.

    Args:
        a: Square matrix over a field
        counter: Operation counter (a fresh one if omitted)

    Returns:
        CharOutput without adjugate

    Raises:
        UsageError: The ring is not a field
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    require_field(ring, "Hessenberg reduction")

    h = a.rows()
    hessenberg_reduce(ring, h, counter)

    polys: List[List[RingElement]] = [[ring.one]]
    for k in range(1, n + 1):
        previous = polys[k - 1]
        p = poly_sub(ring, poly_shift(ring, previous), poly_scale(ring, h[k - 1][k - 1], previous))
        t = ring.one
        for i in range(k - 1, 0, -1):
            t = ring.mul(t, h[i][i - 1])
            p = poly_sub(ring, p, poly_scale(ring, ring.mul(h[i - 1][k - 1], t), polys[i - 1]))
        polys.append(p)
        counter.record(mul=k * k, add=k * k)

    logger.debug(f"hessenberg_charpoly: n={n} ring={ring!r}")
    return CharOutput.from_coeffs(ring, polys[n])
