"""
Exact Charpoly - Main Source Package

Characteristic polynomial, determinant and adjugate of dense matrices over
commutative rings, computed exactly with nearly division-free algorithms,
plus elimination-based comparators and a benchmark harness.
"""
from .exceptions import (
    LinalgError, UsageError, RingMismatchError, DimensionError,
    InexactDivisionError, CharacteristicError, MatrixFileError, BenchMismatchError,
)
from .schemas import RingKind, RingSpec, MatrixFile, BenchRecord
from .rings import (
    Ring, IntegerRing, RationalField, IntegerModRing, IntegerPolynomialRing, make_ring,
)
from .matrix import Matrix, OpCounter, random_matrix
from .charpoly import (
    CharOutput, faddeev_leverrier, preparata_sarwate, berkowitz,
    charpoly_oracle, adjugate_from_charpoly,
)
from .elimination import FFLUResult, bareiss_det, fflu_adjugate, field_lu_det, hessenberg_charpoly
from .parsers import parse_matrix_file, serialize_matrix

__version__ = "1.0.0"

__all__ = [
    # Errors
    "LinalgError", "UsageError", "RingMismatchError", "DimensionError",
    "InexactDivisionError", "CharacteristicError", "MatrixFileError", "BenchMismatchError",

    # Schemas
    "RingKind", "RingSpec", "MatrixFile", "BenchRecord",

    # Rings
    "Ring", "IntegerRing", "RationalField", "IntegerModRing", "IntegerPolynomialRing", "make_ring",

    # Matrices
    "Matrix", "OpCounter", "random_matrix",

    # Algorithms
    "CharOutput", "faddeev_leverrier", "preparata_sarwate", "berkowitz",
    "charpoly_oracle", "adjugate_from_charpoly",
    "FFLUResult", "bareiss_det", "fflu_adjugate", "field_lu_det", "hessenberg_charpoly",

    # Files
    "parse_matrix_file", "serialize_matrix",
]
