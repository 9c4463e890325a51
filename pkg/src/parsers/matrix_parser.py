"""
Matrix Parser - Read and write matrix files.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from ..exceptions import MatrixFileError
from ..matrix.dense import Matrix
from ..rings.factory import make_ring
from ..schemas.matrix_file import MatrixFile


class MatrixFileParser:
    """
    Parse matrix files into Matrix objects.

    A matrix file is UTF-8 JSON shaped like MatrixFile: a ring descriptor,
    the size n and n rows of element encodings. Every failure is reported as
    a MatrixFileError that names the offending location.
    """

    def parse(self, file_path: Union[str, Path]) -> Matrix:
        """
        Parse a matrix file.

        Args:
            file_path: Path to the JSON file

        Returns:
            Matrix in the declared ring

        Raises:
            OSError: The file cannot be read
            MatrixFileError: The content is malformed
        """
        try:
            text = Path(file_path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise MatrixFileError(f"not valid UTF-8 ({e.reason})", location=f"{file_path}: byte {e.start}")
        return self.parse_text(text, source=str(file_path))

    def parse_text(self, text: str, source: str = "<string>") -> Matrix:
        """
        Parse matrix JSON from a string.

        Args:
            text: JSON document
            source: Name used in error messages

        Returns:
            Matrix
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixFileError(e.msg, location=f"{source}: line {e.lineno} column {e.colno}")
        return self.parse_data(data)

    def parse_data(self, data: Any) -> Matrix:
        """
        Build a Matrix from decoded JSON.

        Args:
            data: Decoded document

        Returns:
            Matrix
        """
        try:
            document = MatrixFile.model_validate(data)
        except ValidationError as e:
            error = e.errors()[0]
            location = ".".join(str(part) for part in error["loc"]) or None
            raise MatrixFileError(error["msg"], location=location)

        ring = make_ring(document.ring)
        entries = []
        for i, row in enumerate(document.rows):
            for j, token in enumerate(row):
                try:
                    entries.append(ring.parse(token))
                except ValueError as e:
                    raise MatrixFileError(f"cannot parse {token!r} in {ring!r}: {e}",
                                          location=f"rows[{i}][{j}]")
        return Matrix(ring, document.n, entries, check=False)


def serialize_matrix(matrix: Matrix) -> Dict[str, Any]:
    """
    Matrix as a MatrixFile-shaped dict of canonical encodings.

    Args:
        matrix: Matrix to write

    Returns:
        JSON-ready dict
    """
    ring = matrix.ring
    document = MatrixFile(
        ring=ring.spec,
        n=matrix.n,
        rows=[[ring.format(x) for x in row] for row in matrix.rows()],
    )
    return document.model_dump(mode="json", exclude_none=True)


def parse_matrix_file(file_path: Union[str, Path]) -> Matrix:
    """
    Convenience function to parse a matrix file.

    Args:
        file_path: Path to the JSON file

    Returns:
        Matrix
    """
    parser = MatrixFileParser()
    return parser.parse(file_path)
