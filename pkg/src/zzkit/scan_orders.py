"""Zigzag and raster scan orders as explicit invertible permutations.

All indices are 0-based.  A scan order is a bijection between grid
coordinates and linear positions; grids are indexed ``(row, col)`` in 2D
and ``(row, col, band)`` in 3D, with C (row-major) memory layout.

Note: the square zigzag here walks *down* the first anti-diagonal, i.e.
it visits (1, 0) before (0, 1).  That is the transpose of the classic
ISO JPEG table, which walks up first.
"""

from __future__ import annotations

import functools
from typing import Iterator, NamedTuple

import numpy as np

from .errors import InvalidDimensionError, ShapeMismatchError


class DiagSpan(NamedTuple):
    """Inclusive row range [lo, hi] of one anti-diagonal or diagonal plane."""

    index: int
    lo: int
    hi: int


def diag_spans_2d(rows: int, cols: int) -> Iterator[DiagSpan]:
    """Row spans of the anti-diagonals d = row+col of a rows x cols grid."""
    for d in range(rows + cols - 1):
        yield DiagSpan(d, max(0, d - cols + 1), min(d, rows - 1))


def plane_spans_3d(n: int) -> Iterator[DiagSpan]:
    """Row spans of the diagonal planes s = row+col+band of an n^3 cube."""
    for s in range(3 * n - 2):
        yield DiagSpan(s, max(0, s - 2 * (n - 1)), min(s, n - 1))


class ScanOrder:
    """An explicit permutation over the cells of a 2D or 3D grid.

    ``coords[p]`` is the grid coordinate visited at position ``p``; the
    inverse lookup is precomputed so both directions are O(1).  Instances
    are immutable and safe to share across threads.
    """

    __slots__ = ("dims", "coords", "flat_forward", "flat_inverse")

    def __init__(self, dims: tuple[int, ...], coords: np.ndarray):
        dims = tuple(int(d) for d in dims)
        size = int(np.prod(dims))
        coords = np.ascontiguousarray(coords, dtype=np.int64)
        if coords.shape != (size, len(dims)):
            raise ShapeMismatchError(
                f"expected {size} coordinates of arity {len(dims)}, got {coords.shape}"
            )
        flat = np.ravel_multi_index(tuple(coords.T), dims)
        if np.bincount(flat, minlength=size).max(initial=1) != 1:
            raise ShapeMismatchError("coordinate sequence is not a permutation")
        inverse = np.empty(size, dtype=np.int64)
        inverse[flat] = np.arange(size)
        for a in (coords, flat, inverse):
            a.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "flat_forward", flat)
        object.__setattr__(self, "flat_inverse", inverse)

    def __setattr__(self, name, value):
        raise AttributeError("ScanOrder is immutable")

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (tuple(c) for c in self.coords.tolist())

    def coord_at(self, position: int) -> tuple[int, ...]:
        """Grid coordinate visited at ``position``."""
        return tuple(self.coords[position].tolist())

    def position_of(self, coord: tuple[int, ...]) -> int:
        """Scan position of a grid coordinate."""
        return int(self.flat_inverse[np.ravel_multi_index(coord, self.dims)])


def _require_positive(*extents: int) -> None:
    if any(int(e) < 1 for e in extents):
        raise InvalidDimensionError(f"extents must be >= 1, got {extents}")


@functools.lru_cache(maxsize=None)
def square_zigzag_order(n: int) -> ScanOrder:
    """Zigzag order of an n x n grid, anti-diagonal by anti-diagonal.

    Even diagonals (d = row+col) are walked with row ascending, odd ones
    with row descending.  See the module note on JPEG transposition.
    """
    _require_positive(n)
    return rect_zigzag_order(n, n)


@functools.lru_cache(maxsize=None)
def rect_zigzag_order(rows: int, cols: int) -> ScanOrder:
    """Zigzag order of a rows x cols grid.

    When cols >= rows, even diagonals run row-ascending and odd ones
    row-descending; when rows > cols the parities swap.  For rows == cols
    this degenerates to :func:`square_zigzag_order`.
    """
    _require_positive(rows, cols)
    out = []
    for d, lo, hi in diag_spans_2d(rows, cols):
        ascending = (d % 2 == 0) if cols >= rows else (d % 2 == 1)
        rr = range(lo, hi + 1) if ascending else range(hi, lo - 1, -1)
        out.extend((r, d - r) for r in rr)
    return ScanOrder((rows, cols), np.array(out, dtype=np.int64).reshape(-1, 2))


@functools.lru_cache(maxsize=None)
def cubic_zigzag_order(n: int) -> ScanOrder:
    """Zigzag order of an n^3 cube, plane by plane.

    Cells are grouped by plane s = row+col+band.  On even planes rows and
    cols are walked descending (band ascending within a row); on odd
    planes rows and cols ascend (band descending).  The whole plane
    shares one direction and directions alternate per plane.
    """
    _require_positive(n)
    out = []
    for s, rlo, rhi in plane_spans_3d(n):
        rows = range(rhi, rlo - 1, -1) if s % 2 == 0 else range(rlo, rhi + 1)
        for r in rows:
            clo, chi = max(0, (s - r) - (n - 1)), min(s - r, n - 1)
            cols = range(chi, clo - 1, -1) if s % 2 == 0 else range(clo, chi + 1)
            out.extend((r, c, s - r - c) for c in cols)
    return ScanOrder((n, n, n), np.array(out, dtype=np.int64).reshape(-1, 3))


@functools.lru_cache(maxsize=None)
def raster_order_3d(n: int) -> ScanOrder:
    """Lexicographic baseline order of an n^3 cube: (band, row, col), band slowest."""
    _require_positive(n)
    out = [
        (r, c, b)
        for b in range(n)
        for r in range(n)
        for c in range(n)
    ]
    return ScanOrder((n, n, n), np.array(out, dtype=np.int64).reshape(-1, 3))


def apply_scan(values, order: ScanOrder) -> np.ndarray:
    """Read a grid into a 1D sequence following ``order``.

    Integer grids are promoted losslessly to float64.
    """
    a = np.asarray(values, dtype=np.float64)
    if a.shape != order.dims:
        raise ShapeMismatchError(f"grid shape {a.shape} != order dims {order.dims}")
    return a.reshape(-1)[order.flat_forward]


def invert_scan(values, order: ScanOrder) -> np.ndarray:
    """Rebuild the grid from a scanned 1D sequence; exact inverse of apply_scan."""
    v = np.asarray(values, dtype=np.float64).reshape(-1)
    if v.shape[0] != len(order):
        raise ShapeMismatchError(f"sequence length {v.shape[0]} != order size {len(order)}")
    out = np.empty(len(order), dtype=np.float64)
    out[order.flat_forward] = v
    return out.reshape(order.dims)
