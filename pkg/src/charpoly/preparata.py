"""
Preparata-Sarwate - Baby-step giant-step Faddeev-Leverrier.

Only the baby-step powers A¹..Aᵐ are stored. Instead of a second list of
giant-step powers A^m, A^2m, ..., the Faddeev-Leverrier matrix B is advanced
m steps at a time by one product with Aᵐ plus m scaled additions of
precomputed powers, which halves the working set.
"""
import logging
from math import isqrt
from typing import Optional

from ..exceptions import UsageError
from ..matrix.counter import OpCounter
from ..matrix.dense import (
    Matrix, mat_mul, mat_neg, product_trace, trace, add_scalar_diag, axpy, power_list,
)
from .output import CharOutput

logger = logging.getLogger(__name__)


def default_block_size(n: int) -> int:
    """floor(√n), at least 1."""
    return max(1, isqrt(n))


def expected_matmuls(n: int, m: int) -> int:
    """(m - 1) baby steps plus ceil((n - 1) / m) giant steps."""
    return (m - 1) + -(-(n - 1) // m)


def preparata_sarwate(a: Matrix,
                      m_opt: Optional[int] = None,
                      counter: Optional[OpCounter] = None) -> CharOutput:
    """
    Characteristic polynomial, determinant and adjugate in about 2√n matrix products.

    Args:
        a: Square matrix; the ring must allow exact division by 1..n
        m_opt: Block size m in 1..n (default floor(√n)); larger m trades
            memory for fewer products
        counter: Operation counter (a fresh one if omitted)

    Returns:
        CharOutput with adjugate

    Raises:
        CharacteristicError: Some k <= n is not invertible in the ring
        UsageError: m_opt outside 1..n
    """
    ring, n = a.ring, a.n
    counter = counter if counter is not None else OpCounter()
    if m_opt is not None and not (1 <= m_opt <= max(n, 1)):
        raise UsageError(f"block size m must lie in 1..{n}, got {m_opt}")
    if n == 0:
        return CharOutput.empty(ring)
    ring.require_characteristic(n)

    m = m_opt if m_opt is not None else default_block_size(n)
    m_initial = m

    # powers[j] = A^{j+1}; traces[j] = Tr(A^j) for j = 1..m
    powers = power_list(a, m, counter)
    traces = [ring.zero] + [trace(p) for p in powers]
    counter.record(add=m * n)

    coeffs = [ring.zero] * (n + 1)
    coeffs[n] = ring.one
    b = Matrix.identity(ring, n)
    k = 1

    while k <= n - 1:
        m = min(m, n - k)
        coeffs[n - k] = ring.neg(ring.divexact_small(product_trace(a, b, counter), k))
        counter.record(divexact=1)

        for j in range(1, m):
            c = product_trace(powers[j], b, counter)
            for i in range(j):
                c = ring.add(c, ring.mul(traces[j - i], coeffs[n - k - i]))
            # division by -(k + j), as an exact division by k + j then negation
            coeffs[n - k - j] = ring.neg(ring.divexact_small(c, k + j))
            counter.record(mul=j, add=j, divexact=1)

        # B <- A^m B + Σ_j c_{n-k-j} A^{m-j-1}
        b = mat_mul(powers[m - 1], b, counter)
        for j in range(m):
            power = m - j - 1
            if power == 0:
                b = add_scalar_diag(b, coeffs[n - k - j], counter)
            else:
                b = axpy(b, coeffs[n - k - j], powers[power - 1], counter)

        k += m

    coeffs[0] = ring.neg(ring.divexact_small(product_trace(a, b, counter), n))
    counter.record(divexact=1)

    adjugate = b if n % 2 == 1 else mat_neg(b)

    logger.debug(f"preparata_sarwate: n={n} ring={ring!r} m={m_initial} "
                 f"powers={len(powers)} matmuls={counter.full_matmul}")
    return CharOutput.from_coeffs(ring, coeffs, adjugate=adjugate)
