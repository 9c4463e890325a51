"""
Matrix file schema definitions.
"""
from typing import List, Union
from pydantic import BaseModel, Field, model_validator

from .ring import RingSpec

# Scalars are decimal strings; polynomial entries are arrays of them.
EntryText = Union[str, List[str]]


class MatrixFile(BaseModel):
    """
    On-disk matrix: ring descriptor, size and rows of element encodings.

    Example:
        {"ring": {"kind": "intmod", "modulus": "7"}, "n": 1, "rows": [["9"]]}
    """

    ring: RingSpec
    n: int = Field(..., ge=0, description="Row/column count")
    rows: List[List[EntryText]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixFile":
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, found {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.n:
                raise ValueError(f"rows[{i}] has {len(row)} entries, expected {self.n}")
        return self
