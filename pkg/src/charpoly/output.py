"""
CharOutput - Characteristic polynomial, determinant and adjugate of a matrix.
"""
from typing import Any, List, Optional
from pydantic import BaseModel, ConfigDict, Field

from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement


class CharOutput(BaseModel):
    """
    Result of a characteristic polynomial computation.

    coeffs[k] is the coefficient of x^k in det(xI - A), so coeffs[n] = 1 and
    det = (-1)^n coeffs[0]. The adjugate is present only for the algorithms
    that produce it as a byproduct.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    coeffs: List[Any] = Field(..., description="Ascending coefficients c_0..c_n")
    det: Any
    adjugate: Optional[Matrix] = None

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs: List[RingElement],
                    adjugate: Optional[Matrix] = None) -> "CharOutput":
        """Build the output, deriving det = (-1)^n c_0."""
        n = len(coeffs) - 1
        det = coeffs[0] if n % 2 == 0 else ring.neg(coeffs[0])
        return cls(coeffs=coeffs, det=det, adjugate=adjugate)

    @classmethod
    def empty(cls, ring: Ring) -> "CharOutput":
        """Conventions for the 0×0 matrix: p = 1, det = 1, adj = 0×0."""
        return cls(coeffs=[ring.one], det=ring.one, adjugate=Matrix.zero(ring, 0))
