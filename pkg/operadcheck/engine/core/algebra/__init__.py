"""
Exact coefficient arithmetic over Q, F_p and Z, and the matrix algorithms
(rank, kernel, Smith normal form) every homology computation rests on.
"""

from .exceptions import (
    InvalidRingError,
    RingMismatchError,
    ShapeMismatchError,
    UnsupportedRingError,
)
from .matrices import ExactMatrix, SmithForm, kernel_basis, rank, row_echelon, smith_normal_form
from .rings import RingDescriptor, RingKind, Scalar

__all__ = [
    "ExactMatrix",
    "InvalidRingError",
    "RingDescriptor",
    "RingKind",
    "RingMismatchError",
    "Scalar",
    "ShapeMismatchError",
    "SmithForm",
    "UnsupportedRingError",
    "kernel_basis",
    "rank",
    "row_echelon",
    "smith_normal_form",
]
