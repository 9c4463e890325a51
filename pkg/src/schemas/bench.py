"""
Benchmark record schema definitions.
"""
from typing import List
from pydantic import BaseModel, ConfigDict, Field
from enum import Enum


class OutputKind(str, Enum):
    """What an algorithm computes; digests are only comparable within a kind."""
    CHARPOLY = "charpoly"
    DETERMINANT = "det"


# Fixed CSV column order.
CSV_COLUMNS: List[str] = [
    "n", "ring", "algorithm", "seed", "rep",
    "wall_seconds", "full_matmul", "ring_mul", "ring_divexact", "digest",
]


class BenchRecord(BaseModel):
    """One timed run of one algorithm on one random matrix."""

    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., ge=0)
    ring: str = Field(..., description="Ring label, e.g. int or intmod:101")
    algorithm: str
    seed: int = Field(..., description="Per-cell seed the matrix was drawn with")
    rep: int = Field(default=0, ge=0)

    # Timing of the algorithm call only
    wall_seconds: float = Field(default=0.0, ge=0)

    # Operation counts
    full_matmul: int = 0
    ring_mul: int = 0
    ring_add: int = 0
    ring_divexact: int = 0

    output_digest: str = Field(..., alias="digest")
    det_digest: str = Field(default="", description="Hash of the determinant alone")
    adjugate_digest: str = Field(default="", description="Hash of the adjugate, empty when not computed")
    computes: OutputKind = OutputKind.CHARPOLY

    def to_row(self) -> dict:
        """Record as a flat dict keyed by CSV column."""
        data = self.model_dump(by_alias=True)
        return {column: data[column] for column in CSV_COLUMNS}
