"""
Matrix package - Dense matrices, kernels and operation counters.
"""
from .counter import OpCounter
from .dense import (
    Matrix, mat_mul, mat_neg, product_trace, trace, add_scalar_diag, axpy, power_list,
)
from .generators import random_matrix, random_unimodular, derive_seed

__all__ = [
    "OpCounter",
    "Matrix",
    "mat_mul",
    "mat_neg",
    "product_trace",
    "trace",
    "add_scalar_diag",
    "axpy",
    "power_list",
    "random_matrix",
    "random_unimodular",
    "derive_seed",
]
