"""
Exceptions raised by the rings, matrix kernels and algorithms.
"""
from typing import Optional


class LinalgError(Exception):
    """Base class for every error raised by this package."""


class UsageError(LinalgError, ValueError):
    """Invalid arguments: bad sizes, out-of-range parameters, unsupported ring."""


class RingMismatchError(UsageError):
    """Operands belong to different rings."""


class DimensionError(UsageError):
    """Operands have incompatible shapes."""


class InexactDivisionError(LinalgError, ArithmeticError):
    """A division that must be exact left a remainder."""


class CharacteristicError(LinalgError):
    """
    The ring characteristic divides one of the small integers 1..n.

    Attributes:
        divisor: The offending small integer
        modulus: Modulus of the ring, if any
    """

    def __init__(self, divisor: int, modulus: Optional[int] = None, n: Optional[int] = None):
        self.divisor = divisor
        self.modulus = modulus
        self.n = n
        where = f"Z/{modulus}Z" if modulus is not None else "the ring"
        size = f" (required for n={n})" if n is not None else ""
        super().__init__(f"cannot divide exactly by {divisor} in {where}{size}")


class MatrixFileError(LinalgError):
    """
    A matrix file could not be parsed.

    Attributes:
        location: Field path inside the file, e.g. "rows[1][0]"
    """

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class BenchMismatchError(LinalgError):
    """Two algorithms disagreed on the same benchmark cell."""
