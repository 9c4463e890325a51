"""
Charpoly package - Characteristic polynomial, determinant and adjugate algorithms.
"""
from .output import CharOutput
from .faddeev import faddeev_leverrier
from .preparata import preparata_sarwate, default_block_size, expected_matmuls
from .berkowitz import berkowitz
from .oracle import charpoly_oracle, ORACLE_MAX_N
from .adjugate import adjugate_from_charpoly

__all__ = [
    "CharOutput",
    "faddeev_leverrier",
    "preparata_sarwate",
    "default_block_size",
    "expected_matmuls",
    "berkowitz",
    "charpoly_oracle",
    "ORACLE_MAX_N",
    "adjugate_from_charpoly",
]
