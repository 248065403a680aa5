"""Volume ingestion and emission: ZZV1 raw volumes, PGM frame sequences,
deterministic synthetic generators, and CSV spectrum traces.

A volume is a uint8 ndarray of shape (rows, cols, bands), indexed
``v[row, col, band]``.  Serialized sample order is band-major then
row-major: band slowest, column fastest.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DomainError, FormatError, InvalidDimensionError

VOLUME_MAGIC = b"ZZV1"
_VOL_HEADER = struct.Struct("<4sIII")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Pinned portable generator; identical streams on every platform.

    Reference constants: increment 0x9E3779B97F4A7C15, mixers
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def round_half_away(x) -> np.ndarray:
    """Round to nearest integer, halves away from zero.  Used for every
    sample/coefficient rounding in the toolkit."""
    a = np.asarray(x, dtype=np.float64)
    return np.trunc(a + np.copysign(0.5, a)).astype(np.int64)


def require_volume(v) -> np.ndarray:
    """Validate shape/dtype of a volume array and return it."""
    a = np.asarray(v)
    if a.ndim != 3:
        raise InvalidDimensionError(f"volume must be 3D, got {a.ndim}D")
    if min(a.shape) < 1:
        raise InvalidDimensionError(f"volume extents must be >= 1, got {a.shape}")
    if a.dtype != np.uint8:
        raise DomainError(f"volume samples must be uint8, got {a.dtype}")
    return a


def write_vol(volume) -> bytes:
    """Serialize a volume to the ZZV1 format."""
    v = require_volume(volume)
    rows, cols, bands = v.shape
    header = _VOL_HEADER.pack(VOLUME_MAGIC, rows, cols, bands)
    return header + np.ascontiguousarray(v.transpose(2, 0, 1)).tobytes()


def vol_header(data: bytes) -> tuple[int, int, int]:
    """Parse and validate a ZZV1 header, returning (rows, cols, bands)."""
    if len(data) < _VOL_HEADER.size:
        raise FormatError("ZZV1: truncated header")
    magic, rows, cols, bands = _VOL_HEADER.unpack_from(data)
    if magic != VOLUME_MAGIC:
        raise FormatError(f"ZZV1: bad magic {magic!r}")
    if min(rows, cols, bands) < 1:
        raise FormatError(f"ZZV1: extents must be >= 1, got {(rows, cols, bands)}")
    return rows, cols, bands


def read_vol(data: bytes) -> np.ndarray:
    """Deserialize a ZZV1 byte buffer; exact inverse of write_vol."""
    rows, cols, bands = vol_header(data)
    expected = rows * cols * bands
    payload = data[_VOL_HEADER.size:]
    if len(payload) != expected:
        raise FormatError(
            f"ZZV1: header claims {expected} samples, payload has {len(payload)} bytes"
        )
    samples = np.frombuffer(payload, dtype=np.uint8).reshape(bands, rows, cols)
    return np.ascontiguousarray(samples.transpose(1, 2, 0))


def _parse_pgm(data: bytes, name: str) -> np.ndarray:
    pos = 0

    def token() -> bytes:
        nonlocal pos
        while pos < len(data):
            ch = data[pos : pos + 1]
            if ch.isspace():
                pos += 1
            elif ch == b"#":
                while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise FormatError(f"{name}: truncated PGM header")
        return data[start:pos]

    magic = token()
    if magic != b"P5":
        raise FormatError(f"{name}: not a binary PGM (P5) file")
    try:
        width, height, maxval = int(token()), int(token()), int(token())
    except ValueError as e:
        raise FormatError(f"{name}: malformed PGM header") from e
    if width < 1 or height < 1:
        raise FormatError(f"{name}: bad PGM dimensions {width}x{height}")
    if maxval != 255:
        raise FormatError(f"{name}: maxval must be 255, got {maxval}")
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise FormatError(f"{name}: missing whitespace after maxval")
    pos += 1
    payload = data[pos:]
    if len(payload) != width * height:
        raise FormatError(
            f"{name}: expected {width * height} sample bytes, got {len(payload)}"
        )
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width)


def read_pgm_sequence(paths) -> np.ndarray:
    """Read binary PGM frames as the bands of one volume (frame i -> band i)."""
    paths = [Path(p) for p in paths]
    if not paths:
        raise InvalidDimensionError("no PGM files given")
    frames = [_parse_pgm(p.read_bytes(), str(p)) for p in paths]
    rows, cols = frames[0].shape
    for p, f in zip(paths, frames):
        if f.shape != (rows, cols):
            raise FormatError(
                f"{p}: frame is {f.shape[0]}x{f.shape[1]}, expected {rows}x{cols}"
            )
    return np.stack(frames, axis=2)


def write_pgm_sequence(volume, directory, stem: str = "band") -> list[Path]:
    """Write each band as <stem>_NNN.pgm under ``directory``; returns the paths."""
    v = require_volume(volume)
    rows, cols, bands = v.shape
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(bands):
        path = directory / f"{stem}_{i:03d}.pgm"
        header = b"P5\n%d %d\n255\n" % (cols, rows)
        path.write_bytes(header + np.ascontiguousarray(v[:, :, i]).tobytes())
        paths.append(path)
    return paths


def synth_volume(kind: str, rows: int, cols: int, bands: int, seed: int = 0) -> np.ndarray:
    """Deterministic synthetic volumes.

    ``uniform_random``: samples round(255*u) from the pinned SplitMix64
    stream, filled band-major then row-major.  ``smooth``: a fixed
    separable sin/cos field (seed ignored), byte-identical everywhere.
    """
    if min(rows, cols, bands) < 1:
        raise InvalidDimensionError(f"extents must be >= 1, got {(rows, cols, bands)}")
    if kind == "uniform_random":
        rng = SplitMix64(seed)
        total = rows * cols * bands
        flat = np.fromiter((rng.next_unit() for _ in range(total)), dtype=np.float64, count=total)
        samples = round_half_away(255.0 * flat).astype(np.uint8)
        return np.ascontiguousarray(samples.reshape(bands, rows, cols).transpose(1, 2, 0))
    if kind == "smooth":
        r = np.arange(rows, dtype=np.float64).reshape(-1, 1, 1)
        c = np.arange(cols, dtype=np.float64).reshape(1, -1, 1)
        b = np.arange(bands, dtype=np.float64).reshape(1, 1, -1)
        fld = (
            128.0
            + 60.0 * np.sin(2.0 * np.pi * r / rows) * np.cos(2.0 * np.pi * c / cols)
            + 40.0 * np.cos(2.0 * np.pi * b / bands)
        )
        return np.clip(round_half_away(fld), 0, 255).astype(np.uint8)
    raise ValueError(f"unknown synthetic volume kind {kind!r}")


@dataclass(frozen=True)
class SpectrumTrace:
    """A zigzag-ordered coefficient sequence destined for CSV."""

    values: np.ndarray
    label: str = ""


def write_csv_spectrum(trace: SpectrumTrace) -> str:
    """CSV text for a spectrum trace: header, then index,coefficient rows.

    Coefficients are written with full round-trip precision.
    """
    values = np.asarray(trace.values, dtype=np.float64).reshape(-1)
    if values.size == 0:
        raise InvalidDimensionError("empty spectrum trace")
    lines = ["index,coefficient"]
    lines.extend(f"{i},{v!r}" for i, v in enumerate(values.tolist()))
    return "\n".join(lines) + "\n"
