"""Demonstration volumetric block codec.

Pipeline: partition into cubic blocks (edge-replication padding), level
shift by -128, 3D DCT, uniform scalar quantization, scan to 1D, run-length
coding of zero gaps, Exp-Golomb entropy coding.  Lossy only through
quantization; everything else is exactly invertible.

Compressed stream layout (ZZC1): a fixed little-endian header, then one
Exp-Golomb symbol block per volume block in raster order of block
coordinates (band-block slowest), zero-padded to a whole byte at the end.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .bits import BitReader, Bits, BitWriter
from .errors import CorruptStreamError, ShapeMismatchError
from .scan_orders import ScanOrder, cubic_zigzag_order, raster_order_3d, square_zigzag_order
from .transforms import dct3d, idct3d
from .volume_io import require_volume, round_half_away

MAGIC = b"ZZC1"
VERSION = 1
VALID_BLOCK_SIZES = (2, 4, 8, 16)

# magic, version, scan_id, block_size, reserved, quant_step, rows, cols, bands
_HEADER = struct.Struct("<4sBBBBHIII")
HEADER_SIZE = _HEADER.size


class ScanKind(IntEnum):
    """Coefficient scan selector stored in the stream header."""

    RASTER3D = 0
    ZIGZAG3D = 1
    ZIGZAG2D_PER_BAND = 2

    @property
    def label(self) -> str:
        return _SCAN_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "ScanKind":
        for kind, name in _SCAN_LABELS.items():
            if name == label:
                return kind
        raise ValueError(f"unknown scan kind {label!r}")


_SCAN_LABELS = {
    ScanKind.RASTER3D: "raster3d",
    ScanKind.ZIGZAG3D: "zigzag3d",
    ScanKind.ZIGZAG2D_PER_BAND: "zigzag2d_per_band",
}


@dataclass(frozen=True)
class CodecConfig:
    quant_step: int
    block_size: int = 8
    scan: ScanKind = ScanKind.ZIGZAG3D

    def __post_init__(self):
        if self.block_size not in VALID_BLOCK_SIZES:
            raise ValueError(
                f"block_size must be one of {VALID_BLOCK_SIZES}, got {self.block_size}"
            )
        if not 1 <= int(self.quant_step) <= 0xFFFF:
            raise ValueError(f"quant_step must be in [1, 65535], got {self.quant_step}")
        object.__setattr__(self, "scan", ScanKind(self.scan))


class RleSymbol(NamedTuple):
    run: int  # zeros preceding the level
    level: int  # nonzero quantized coefficient


@dataclass(frozen=True)
class BlockGrid:
    """Where the blocks of a padded volume came from."""

    dims: tuple[int, int, int]  # original (rows, cols, bands)
    padded: tuple[int, int, int]
    block_size: int
    counts: tuple[int, int, int]  # blocks per axis

    @property
    def block_count(self) -> int:
        return self.counts[0] * self.counts[1] * self.counts[2]


@lru_cache(maxsize=None)
def block_scan_order(scan: ScanKind, block_size: int) -> ScanOrder:
    """The coefficient ordering a given scan kind induces on an n^3 block."""
    n = block_size
    if scan == ScanKind.RASTER3D:
        return raster_order_3d(n)
    if scan == ScanKind.ZIGZAG3D:
        return cubic_zigzag_order(n)
    # per-band: the square zigzag within each band, bands in ascending order
    sq = square_zigzag_order(n).coords
    coords = np.concatenate(
        [np.column_stack([sq, np.full(n * n, band, dtype=np.int64)]) for band in range(n)]
    )
    return ScanOrder((n, n, n), coords)


def partition_blocks(volume, block_size: int) -> tuple[list[np.ndarray], BlockGrid]:
    """Split a volume into n^3 blocks, replicating edge samples to pad.

    Blocks come back in raster order of block coordinates: band-block
    slowest, then row-block, then column-block.
    """
    v = require_volume(volume)
    if block_size not in VALID_BLOCK_SIZES:
        raise ValueError(f"block_size must be one of {VALID_BLOCK_SIZES}, got {block_size}")
    n = block_size
    pads = tuple((-d) % n for d in v.shape)
    if any(pads):
        v = np.pad(v, tuple((0, p) for p in pads), mode="edge")
    counts = tuple(d // n for d in v.shape)
    blocks = [
        v[rb * n : rb * n + n, cb * n : cb * n + n, bb * n : bb * n + n]
        for bb in range(counts[2])
        for rb in range(counts[0])
        for cb in range(counts[1])
    ]
    grid = BlockGrid(require_volume(volume).shape, v.shape, n, counts)
    return blocks, grid


def assemble_blocks(blocks, grid: BlockGrid) -> np.ndarray:
    """Inverse of partition_blocks; crops padding back off."""
    n = grid.block_size
    out = np.empty(grid.padded, dtype=np.uint8)
    it = iter(blocks)
    for bb in range(grid.counts[2]):
        for rb in range(grid.counts[0]):
            for cb in range(grid.counts[1]):
                out[rb * n : rb * n + n, cb * n : cb * n + n, bb * n : bb * n + n] = next(it)
    r, c, b = grid.dims
    return np.ascontiguousarray(out[:r, :c, :b])


def level_shift_forward(block) -> np.ndarray:
    return np.asarray(block, dtype=np.float64) - 128.0


def level_shift_inverse(values) -> np.ndarray:
    shifted = round_half_away(np.asarray(values, dtype=np.float64) + 128.0)
    return np.clip(shifted, 0, 255).astype(np.uint8)


def quantize(coeffs, step: int) -> np.ndarray:
    return round_half_away(np.asarray(coeffs, dtype=np.float64) / step)


def dequantize(quantized, step: int) -> np.ndarray:
    return np.asarray(quantized, dtype=np.float64) * step


def rle_encode(seq) -> list[RleSymbol]:
    """(run, level) pairs over a 1D integer sequence; trailing zeros implicit."""
    symbols = []
    run = 0
    for value in np.asarray(seq, dtype=np.int64).tolist():
        if value == 0:
            run += 1
        else:
            symbols.append(RleSymbol(run, value))
            run = 0
    return symbols


def rle_decode(symbols, length: int) -> np.ndarray:
    out = np.zeros(length, dtype=np.int64)
    pos = 0
    for run, level in symbols:
        pos += run
        if pos >= length:
            raise CorruptStreamError(f"rle: run overflows block of {length} coefficients")
        out[pos] = level
        pos += 1
    return out


def write_symbols(blocks) -> Bits:
    """Entropy-code per-block symbol lists: ue(count), then per symbol
    ue(run) and se(level)."""
    w = BitWriter()
    for symbols in blocks:
        w.write_ue(len(symbols))
        for run, level in symbols:
            if level == 0:
                raise ValueError("rle level must be nonzero")
            w.write_ue(run)
            w.write_se(level)
    return w.getbits()


def read_symbols(bits: Bits, block_count: int) -> list[list[RleSymbol]]:
    """Inverse of write_symbols; rejects trailing data and nonzero padding."""
    r = BitReader(bits)
    blocks = []
    for _ in range(block_count):
        count = r.read_ue()
        symbols = []
        for _ in range(count):
            run = r.read_ue()
            level = r.read_se()
            if level == 0:
                raise CorruptStreamError("symbol stream: zero level")
            symbols.append(RleSymbol(run, level))
        blocks.append(symbols)
    if r.remaining >= 8:
        raise CorruptStreamError(f"symbol stream: {r.remaining} bits of trailing data")
    while r.remaining:
        if r.read_bit():
            raise CorruptStreamError("symbol stream: nonzero padding bits")
    return blocks


def encode_volume(volume, config: CodecConfig) -> bytes:
    """Compress a volume to a ZZC1 byte string.  Deterministic: equal
    volume and config give byte-identical output."""
    v = require_volume(volume)
    rows, cols, bands = v.shape
    header = _HEADER.pack(
        MAGIC, VERSION, int(config.scan), config.block_size, 0, config.quant_step,
        rows, cols, bands,
    )
    order = block_scan_order(config.scan, config.block_size)
    blocks, _ = partition_blocks(v, config.block_size)
    coded = []
    for block in blocks:
        coeffs = dct3d(level_shift_forward(block))
        q = quantize(coeffs, config.quant_step)
        coded.append(rle_encode(q.reshape(-1)[order.flat_forward]))
    return header + write_symbols(coded).data


def read_header(data: bytes) -> tuple[CodecConfig, tuple[int, int, int]]:
    """Parse and validate a ZZC1 header, returning (config, dims)."""
    if len(data) < HEADER_SIZE:
        raise CorruptStreamError("header: truncated")
    magic, version, scan_id, block_size, reserved, quant_step, rows, cols, bands = (
        _HEADER.unpack_from(data)
    )
    if magic != MAGIC:
        raise CorruptStreamError(f"header: bad magic {magic!r}")
    if version != VERSION:
        raise CorruptStreamError(f"header: unsupported version {version}")
    try:
        scan = ScanKind(scan_id)
    except ValueError:
        raise CorruptStreamError(f"header: unknown scan id {scan_id}") from None
    if block_size not in VALID_BLOCK_SIZES:
        raise CorruptStreamError(f"header: bad block size {block_size}")
    if reserved != 0:
        raise CorruptStreamError(f"header: reserved byte is {reserved}")
    if quant_step < 1:
        raise CorruptStreamError("header: quant step must be >= 1")
    if min(rows, cols, bands) < 1:
        raise CorruptStreamError(f"header: extents must be >= 1, got {(rows, cols, bands)}")
    return CodecConfig(quant_step, block_size, scan), (rows, cols, bands)


def decode_volume(data: bytes) -> np.ndarray:
    """Decompress a ZZC1 byte string back to a volume."""
    config, dims = read_header(data)
    n = config.block_size
    counts = tuple(-(-d // n) for d in dims)
    padded = tuple(c * n for c in counts)
    grid = BlockGrid(dims, padded, n, (counts[0], counts[1], counts[2]))
    payload = data[HEADER_SIZE:]
    coded = read_symbols(Bits(payload, 8 * len(payload)), grid.block_count)
    order = block_scan_order(config.scan, n)
    blocks = []
    for symbols in coded:
        scanned = rle_decode(symbols, n * n * n)
        q = np.zeros(n * n * n, dtype=np.int64)
        q[order.flat_forward] = scanned
        coeffs = dequantize(q.reshape(n, n, n), config.quant_step)
        blocks.append(level_shift_inverse(idct3d(coeffs)))
    return assemble_blocks(blocks, grid)


def psnr(reference, test) -> float:
    """Peak signal-to-noise ratio in dB against a 255 peak; inf when equal."""
    a = require_volume(reference)
    b = require_volume(test)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"volume shapes differ: {a.shape} vs {b.shape}")
    mse = float(np.mean((a.astype(np.float64) - b.astype(np.float64)) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / mse)


@dataclass(frozen=True)
class QualityReport:
    scan: ScanKind
    compressed_bytes: int
    psnr_db: float


def compare_scan_orders(volume, block_size: int, quant_step: int) -> list[QualityReport]:
    """Encode with each scan kind and report size and fidelity.

    Scan choice only permutes coefficients ahead of entropy coding, so
    the PSNR column is identical across rows; only the size moves.
    """
    v = require_volume(volume)
    reports = []
    for scan in ScanKind:
        data = encode_volume(v, CodecConfig(quant_step, block_size, scan))
        decoded = decode_volume(data)
        reports.append(QualityReport(scan, len(data), psnr(v, decoded)))
    return reports
