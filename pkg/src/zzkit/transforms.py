"""Orthonormal DCT-II and inverse in 1, 2, and 3 dimensions.

The transform is applied separably, one axis at a time, as a direct
O(N^2) multiply against a precomputed cosine basis.  ``naive_dct_oracle``
evaluates the multidimensional DCT-II definition coefficient by
coefficient with no separable shortcut; it exists purely as an
independent cross-check for the test suite.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import DomainError, InvalidDimensionError, OversizeError

_ORACLE_MAX_SIZE = 4096


@functools.lru_cache(maxsize=None)
def _basis(n: int) -> np.ndarray:
    """Orthonormal DCT-II basis: B[u, m] = alpha(u) cos(pi (2m+1) u / 2n)."""
    m = np.arange(n, dtype=np.float64)
    u = np.arange(n, dtype=np.float64)
    mat = np.cos(np.pi * np.outer(u, 2.0 * m + 1.0) / (2.0 * n)) * np.sqrt(2.0 / n)
    mat[0] = np.sqrt(1.0 / n)  # alpha(0) row written directly, cos term is 1
    mat.setflags(write=False)
    return mat


def _checked(values, ndim: int) -> np.ndarray:
    a = np.asarray(values, dtype=np.float64)
    if a.ndim != ndim:
        raise InvalidDimensionError(f"expected a {ndim}D input, got {a.ndim}D")
    if a.size == 0:
        raise InvalidDimensionError("empty input")
    if not np.all(np.isfinite(a)):
        raise DomainError("input contains non-finite values")
    return a


def _along_axis(a: np.ndarray, axis: int, mat: np.ndarray) -> np.ndarray:
    return np.moveaxis(np.tensordot(mat, a, axes=([1], [axis])), 0, axis)


def _transform(a: np.ndarray, inverse: bool) -> np.ndarray:
    for axis, n in enumerate(a.shape):
        mat = _basis(n)
        a = _along_axis(a, axis, mat.T if inverse else mat)
    return a


def dct1(signal) -> np.ndarray:
    """Forward orthonormal DCT-II of a 1D signal."""
    return _transform(_checked(signal, 1), inverse=False)


def idct1(coeffs) -> np.ndarray:
    """Inverse of :func:`dct1` (DCT-III with matching normalization)."""
    return _transform(_checked(coeffs, 1), inverse=True)


def dct2d(matrix) -> np.ndarray:
    """Separable 2D DCT-II; DC coefficient equals sum / sqrt(rows*cols)."""
    return _transform(_checked(matrix, 2), inverse=False)


def idct2d(coeffs) -> np.ndarray:
    """Inverse 2D transform."""
    return _transform(_checked(coeffs, 2), inverse=True)


def dct3d(cube) -> np.ndarray:
    """Separable 3D DCT-II; equivalent to a per-band 2D pass followed by a
    1D pass along bands (the axis passes commute)."""
    return _transform(_checked(cube, 3), inverse=False)


def idct3d(coeffs) -> np.ndarray:
    """Inverse 3D transform."""
    return _transform(_checked(coeffs, 3), inverse=True)


def naive_dct_oracle(values) -> np.ndarray:
    """DCT-II by direct summation over every input sample, per coefficient.

    Quadratic in the input size, so inputs larger than 4096 cells are
    refused.  Test-only reference; keep it independent of the fast path.
    """
    a = np.asarray(values, dtype=np.float64)
    if a.ndim not in (1, 2, 3):
        raise InvalidDimensionError(f"expected 1D/2D/3D input, got {a.ndim}D")
    if a.size == 0:
        raise InvalidDimensionError("empty input")
    if a.size > _ORACLE_MAX_SIZE:
        raise OversizeError(f"oracle input of {a.size} cells exceeds {_ORACLE_MAX_SIZE}")
    out = np.empty(a.shape, dtype=np.float64)
    for idx in np.ndindex(*a.shape):
        term = a
        scale = 1.0
        for axis, (u, n) in enumerate(zip(idx, a.shape)):
            m = np.arange(n, dtype=np.float64)
            cosv = np.cos(np.pi * (2.0 * m + 1.0) * u / (2.0 * n))
            shape = [1] * a.ndim
            shape[axis] = n
            term = term * cosv.reshape(shape)
            scale *= np.sqrt(1.0 / n) if u == 0 else np.sqrt(2.0 / n)
        out[idx] = scale * term.sum()
    return out
