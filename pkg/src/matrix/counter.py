"""
OpCounter - Tally of ring operations and full matrix products.
"""
from typing import Dict
from pydantic import BaseModel, Field


class OpCounter(BaseModel):
    """
    Single-owner accumulator threaded through every kernel call.

    Counts only grow during a computation. Do not share one counter between
    computations running concurrently.
    """

    ring_mul: int = Field(default=0, ge=0)
    ring_add: int = Field(default=0, ge=0)
    ring_divexact: int = Field(default=0, ge=0)

    # Number of n×n · n×n products
    full_matmul: int = Field(default=0, ge=0)
    product_trace_calls: int = Field(default=0, ge=0)

    def record_matmul(self, n: int) -> None:
        """Classical product: n³ multiplications, n²(n-1) additions."""
        self.full_matmul += 1
        self.ring_mul += n ** 3
        self.ring_add += n * n * max(n - 1, 0)

    def record_product_trace(self, n: int) -> None:
        """Diagonal of a product only: n² multiplications."""
        self.product_trace_calls += 1
        self.ring_mul += n * n
        self.ring_add += max(n * n - 1, 0)

    def record(self, mul: int = 0, add: int = 0, divexact: int = 0) -> None:
        """Add scalar operation counts."""
        self.ring_mul += mul
        self.ring_add += add
        self.ring_divexact += divexact

    def snapshot(self) -> Dict[str, int]:
        return self.model_dump()
