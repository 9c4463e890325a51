"""
Elimination package - Division-based comparators: Bareiss, LU, Hessenberg.
"""
from .bareiss import FFLUResult, bareiss_det, fflu_adjugate
from .lu import field_lu_det, require_field
from .hessenberg import hessenberg_charpoly, hessenberg_reduce

__all__ = [
    "FFLUResult",
    "bareiss_det",
    "fflu_adjugate",
    "field_lu_det",
    "require_field",
    "hessenberg_charpoly",
    "hessenberg_reduce",
]
