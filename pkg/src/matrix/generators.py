"""
Random matrix generation - Reproducible test and benchmark inputs.
"""
import hashlib
from typing import Optional

import numpy as np

from ..exceptions import UsageError
from ..rings.base import Ring
from ..rings.polynomials import IntegerPolynomialRing
from .dense import Matrix

_SEED_MASK = (1 << 64) - 1


def random_matrix(ring: Ring,
                  n: int,
                  lo: int = -10,
                  hi: int = 10,
                  seed: int = 0,
                  degree: int = 1) -> Matrix:
    """
    Random n×n matrix with integer entries uniform on [lo, hi].

    The generator is numpy's PCG64 seeded with `seed` reduced to 64 bits, and
    entries are drawn in row-major order with `Generator.integers(...,
    endpoint=True)`, so a seed always yields the same matrix.

    Args:
        ring: Target ring; integers are embedded (reduced mod m for intmod)
        n: Size
        lo: Smallest entry
        hi: Largest entry
        seed: 64-bit seed
        degree: Degree of each entry over the polynomial ring (coefficients
            in [lo, hi]); ignored for other rings

    Returns:
        Matrix over `ring`
    """
    if lo > hi:
        raise UsageError(f"empty range [{lo}, {hi}]")
    if n < 0:
        raise UsageError(f"size must be >= 0, got {n}")

    rng = np.random.Generator(np.random.PCG64(seed & _SEED_MASK))

    if isinstance(ring, IntegerPolynomialRing):
        if degree < 0:
            raise UsageError(f"degree must be >= 0, got {degree}")
        draws = rng.integers(lo, hi, size=(n * n, degree + 1), endpoint=True).tolist()
        entries = [ring.from_coefficients(coeffs) for coeffs in draws]
    else:
        draws = rng.integers(lo, hi, size=n * n, endpoint=True).tolist()
        entries = [ring.from_int(x) for x in draws]

    return Matrix(ring, n, entries, check=False)


def derive_seed(master_seed: int, n: int, rep: int) -> int:
    """
    Per-cell seed from (master seed, size, repetition).

    Independent of the algorithm list, so adding an algorithm to a benchmark
    never changes the matrices the others see.

    Args:
        master_seed: Seed given on the command line
        n: Matrix size
        rep: Repetition index

    Returns:
        Non-negative 63-bit integer
    """
    digest = hashlib.blake2b(f"{master_seed}:{n}:{rep}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1


def random_unimodular(ring: Ring, n: int, seed: int = 0, steps: Optional[int] = None) -> Matrix:
    """
    Random integer matrix with determinant ±1, as a product of elementary
    row operations applied to the identity.

    Args:
        ring: Target ring
        n: Size
        seed: 64-bit seed
        steps: Number of row operations (default 3n)

    Returns:
        Matrix over `ring` whose inverse is again integral
    """
    rng = np.random.Generator(np.random.PCG64(seed & _SEED_MASK))
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.choice(n, size=2, replace=False).tolist()
        k = int(rng.integers(-2, 2, endpoint=True))
        rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
    return Matrix.from_ints(ring, rows)
