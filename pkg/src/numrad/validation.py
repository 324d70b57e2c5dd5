"""Input validation helpers: coercion to complex ndarrays plus shape/finiteness checks."""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatch, MatrixFormatError, NonSquare, NotUnit

__all__ = [
    "as_matrix",
    "as_square",
    "as_vector",
    "check_compatible_product",
    "check_same_shape",
    "check_unit",
]


def as_matrix(value) -> np.ndarray:
    """Coerce to a 2-D complex128 array with finite entries."""
    arr = np.asarray(value, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise MatrixFormatError(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise MatrixFormatError("matrix entries must be finite (no NaN/Inf)")
    return arr


def as_square(value) -> np.ndarray:
    arr = as_matrix(value)
    if arr.shape[0] != arr.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {arr.shape}")
    return arr


def as_vector(value, dim: int | None = None) -> np.ndarray:
    """Coerce to a 1-D complex128 array, optionally of prescribed length."""
    arr = np.asarray(value, dtype=np.complex128).reshape(-1)
    if arr.size < 1:
        raise MatrixFormatError("expected a non-empty vector")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise MatrixFormatError("vector entries must be finite (no NaN/Inf)")
    if dim is not None and arr.size != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {arr.size}")
    return arr


def check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch: {a.shape} vs {b.shape}")


def check_compatible_product(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")


def check_unit(e: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    e = as_vector(e)
    norm = float(np.linalg.norm(e))
    if abs(norm - 1.0) > tol:
        raise NotUnit(f"vector norm {norm!r} deviates from 1 by more than {tol}")
    return e
