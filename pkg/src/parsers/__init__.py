"""
Parsers package - Matrix file reading and writing.
"""
from .matrix_parser import MatrixFileParser, parse_matrix_file, serialize_matrix

__all__ = [
    "MatrixFileParser",
    "parse_matrix_file",
    "serialize_matrix",
]
