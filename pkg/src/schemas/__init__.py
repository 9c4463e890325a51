"""Schemas package - Pydantic data models."""
from .ring import RingKind, RingSpec
from .matrix_file import MatrixFile, EntryText
from .bench import BenchRecord, OutputKind, CSV_COLUMNS

__all__ = [
    # Ring schemas
    "RingKind",
    "RingSpec",
    # Matrix file schemas
    "MatrixFile",
    "EntryText",
    # Bench schemas
    "BenchRecord",
    "OutputKind",
    "CSV_COLUMNS",
]
