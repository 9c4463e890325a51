"""
Dense square matrices over a ring, with the kernels the algorithms share.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

from ..exceptions import DimensionError, RingMismatchError, UsageError
from ..rings.base import Ring, RingElement
from .counter import OpCounter


class Matrix:
    """
    Immutable n×n matrix stored row-major.

    Entries are validated against the ring once, here; the kernels below rely
    on that and call the ring's unchecked dot product.
    """

    __slots__ = ("ring", "n", "entries")

    def __init__(self, ring: Ring, n: int, entries: Iterable[RingElement], check: bool = True):
        """
        Initialize matrix.

        Args:
            ring: Ring the entries belong to
            n: Row/column count
            entries: Row-major entries, n² of them
            check: Validate entries against the ring
        """
        entries = tuple(entries)
        if n < 0 or len(entries) != n * n:
            raise DimensionError(f"{len(entries)} entries do not form a {n}×{n} matrix")
        if check:
            ring.check(*entries)
        self.ring = ring
        self.n = n
        self.entries = entries

    # ===== Constructors =====

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[RingElement]]) -> "Matrix":
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {n}")
        return cls(ring, n, [x for row in rows for x in row])

    @classmethod
    def from_ints(cls, ring: Ring, rows: Sequence[Sequence[int]]) -> "Matrix":
        """Embed an integer matrix into the ring."""
        return cls.from_rows(ring, [[ring.from_int(x) for x in row] for row in rows])

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "Matrix":
        return cls(ring, n, [ring.zero] * (n * n), check=False)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def scalar(cls, ring: Ring, n: int, c: RingElement) -> "Matrix":
        """c·I."""
        ring.check(c)
        entries = [ring.zero] * (n * n)
        for i in range(n):
            entries[i * n + i] = c
        return cls(ring, n, entries, check=False)

    # ===== Access =====

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return self.entries[i * self.n + j]

    def row(self, i: int) -> Tuple[RingElement, ...]:
        return self.entries[i * self.n:(i + 1) * self.n]

    def column(self, j: int) -> Tuple[RingElement, ...]:
        return self.entries[j::self.n]

    def rows(self) -> List[List[RingElement]]:
        return [list(self.row(i)) for i in range(self.n)]

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for x in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.ring, self.n, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.ring!r}, {self.rows()!r})"


def _check_pair(a: Matrix, b: Matrix) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"matrices over {a.ring!r} and {b.ring!r}")
    if a.n != b.n:
        raise DimensionError(f"{a.n}×{a.n} and {b.n}×{b.n} matrices")


def mat_mul(a: Matrix, b: Matrix, counter: Optional[OpCounter] = None) -> Matrix:
    """
    Classical triple-loop product a·b.

    Args:
        a: Left factor
        b: Right factor
        counter: Receives one full matmul and n³ multiplications

    Returns:
        Product matrix
    """
    _check_pair(a, b)
    n, dot = a.n, a.ring.dot
    rows = [a.row(i) for i in range(n)]
    cols = [b.column(j) for j in range(n)]
    entries = [dot(r, c) for r in rows for c in cols]
    if counter is not None:
        counter.record_matmul(n)
    return Matrix(a.ring, n, entries, check=False)


def product_trace(a: Matrix, b: Matrix, counter: Optional[OpCounter] = None) -> RingElement:
    """
    Tr(a·b) from the diagonal dot products only, in n² multiplications.

    Args:
        a: Left factor
        b: Right factor
        counter: Receives one product-trace call; full_matmul is untouched

    Returns:
        Σ_i Σ_j a[i][j]·b[j][i]
    """
    _check_pair(a, b)
    ring = a.ring
    if counter is not None:
        counter.record_product_trace(a.n)
    return ring.sum(ring.dot(a.row(i), b.column(i)) for i in range(a.n))


def trace(a: Matrix) -> RingElement:
    """Sum of the diagonal entries."""
    n = a.n
    return a.ring.sum(a.entries[i * n + i] for i in range(n))


def add_scalar_diag(a: Matrix, c: RingElement, counter: Optional[OpCounter] = None) -> Matrix:
    """a + c·I."""
    ring, n = a.ring, a.n
    ring.check(c)
    entries = list(a.entries)
    for i in range(n):
        entries[i * n + i] = ring.add(entries[i * n + i], c)
    if counter is not None:
        counter.record(add=n)
    return Matrix(ring, n, entries, check=False)


def axpy(b: Matrix, c: RingElement, p: Matrix, counter: Optional[OpCounter] = None) -> Matrix:
    """b + c·p, entrywise."""
    _check_pair(b, p)
    ring = b.ring
    ring.check(c)
    if ring.is_zero(c):
        return b
    entries = [ring.add(x, ring.mul(c, y)) for x, y in zip(b.entries, p.entries)]
    if counter is not None:
        counter.record(mul=b.n * b.n, add=b.n * b.n)
    return Matrix(ring, b.n, entries, check=False)


def mat_neg(a: Matrix) -> Matrix:
    """-a, entrywise."""
    ring = a.ring
    return Matrix(ring, a.n, [ring.neg(x) for x in a.entries], check=False)


def power_list(a: Matrix, m: int, counter: Optional[OpCounter] = None) -> List[Matrix]:
    """
    Baby-step powers A¹, A², …, Aᵐ.

    Args:
        a: Square matrix
        m: Number of powers (>= 1)
        counter: Receives m - 1 full matmuls

    Returns:
        List whose element k - 1 is Aᵏ
    """
    if m < 1:
        raise UsageError(f"power count must be >= 1, got {m}")
    powers = [a]
    for _ in range(m - 1):
        powers.append(mat_mul(a, powers[-1], counter))
    return powers
