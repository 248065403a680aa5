"""Acceptance gate: one test per numbered criterion, each printing a
pass/fail line to the terminal (bypassing capture) so the run log shows
the verdicts explicitly.
"""

import math
import random
import re
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from zzkit import cli
from zzkit.codec import (
    CodecConfig,
    RleSymbol,
    ScanKind,
    decode_volume,
    encode_volume,
    psnr,
    read_symbols,
    write_symbols,
)
from zzkit.bits import BitWriter
from zzkit.scan_orders import (
    apply_scan,
    cubic_zigzag_order,
    invert_scan,
    rect_zigzag_order,
    square_zigzag_order,
)
from zzkit.transforms import (
    dct1,
    dct2d,
    dct3d,
    idct1,
    idct2d,
    idct3d,
    naive_dct_oracle,
)
from zzkit.volume_io import (
    read_pgm_sequence,
    read_vol,
    synth_volume,
    write_pgm_sequence,
    write_vol,
)

REPO = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "data" / "smooth16_b8_q8_zigzag3d.zzc"
RESULTS = REPO / "results" / "scan_comparison.md"

QUANT_SWEEP = (1, 2, 4, 8, 16, 32)


@contextmanager
def criterion(capsys, number, name):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"criterion {number} ({name}): FAIL")
        raise
    with capsys.disabled():
        print(f"criterion {number} ({name}): PASS")


def test_criterion_1_scan_bijectivity(capsys):
    rng = np.random.default_rng(1)
    with criterion(capsys, 1, "scan bijectivity"):
        for n in range(1, 17):
            order = cubic_zigzag_order(n)
            assert sorted(order.flat_forward.tolist()) == list(range(n**3))
            grid = rng.integers(0, 256, size=(n, n, n)).astype(np.float64)
            assert np.array_equal(invert_scan(apply_scan(grid, order), order), grid)
        for r in range(1, 13):
            for c in range(1, 13):
                order = rect_zigzag_order(r, c)
                assert sorted(order.flat_forward.tolist()) == list(range(r * c))
                grid = rng.integers(0, 256, size=(r, c)).astype(np.float64)
                assert np.array_equal(invert_scan(apply_scan(grid, order), order), grid)


def test_criterion_2_canonical_pins(capsys):
    with criterion(capsys, 2, "canonical order pins"):
        assert list(square_zigzag_order(4)) == [
            (0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (2, 0), (3, 0), (2, 1),
            (1, 2), (0, 3), (1, 3), (2, 2), (3, 1), (3, 2), (2, 3), (3, 3),
        ]
        assert list(rect_zigzag_order(2, 3)) == [
            (0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (1, 2),
        ]
        assert list(rect_zigzag_order(3, 2)) == [
            (0, 0), (0, 1), (1, 0), (2, 0), (1, 1), (2, 1),
        ]
        assert list(cubic_zigzag_order(2)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0),
            (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
        ]


def _triple_count(n, s):
    # lattice points of r+c+b = s inside [0, n)^3, by inclusion-exclusion
    total = 0
    for j in range(4):
        a = s - j * n + 2
        pairs = a * (a - 1) // 2 if a >= 2 else 0
        total += (-1) ** j * math.comb(3, j) * pairs
    return total


def test_criterion_3_plane_structure(capsys):
    with criterion(capsys, 3, "plane monotonicity and segment sizes"):
        for r in range(1, 13):
            for c in range(1, 13):
                order = rect_zigzag_order(r, c)
                sums = order.coords.sum(axis=1)
                assert np.all(np.diff(sums) >= 0)
                assert order.coord_at(0) == (0, 0)
                assert order.coord_at(len(order) - 1) == (r - 1, c - 1)
        for n in range(1, 17):
            order = cubic_zigzag_order(n)
            sums = order.coords.sum(axis=1)
            assert np.all(np.diff(sums) >= 0)
            counts = np.bincount(sums, minlength=3 * n - 2)
            for s in range(3 * n - 2):
                assert counts[s] == _triple_count(n, s)
            assert order.coord_at(0) == (0, 0, 0)
            assert order.coord_at(len(order) - 1) == (n - 1, n - 1, n - 1)


def test_criterion_4_degeneration(capsys):
    with criterion(capsys, 4, "rect(n,n) equals square(n)"):
        for n in range(1, 17):
            assert np.array_equal(
                rect_zigzag_order(n, n).coords, square_zigzag_order(n).coords
            )


def test_criterion_5_transforms_vs_oracle(capsys):
    forward = {1: dct1, 2: dct2d, 3: dct3d}
    inverse = {1: idct1, 2: idct2d, 3: idct3d}
    rng = np.random.default_rng(20260822)
    with criterion(capsys, 5, "transforms match the summation oracle"):
        for i in range(200):
            ndim = i % 3 + 1
            shape = tuple(int(v) for v in rng.integers(1, 9, size=ndim))
            x = rng.uniform(-128.0, 127.0, size=shape)
            coeffs = forward[ndim](x)
            assert np.max(np.abs(coeffs - naive_dct_oracle(x))) < 1e-9
            assert np.max(np.abs(inverse[ndim](coeffs) - x)) < 1e-9
            assert np.sum(coeffs * coeffs) == pytest.approx(
                np.sum(x * x), rel=1e-9, abs=1e-12
            )
            dc = coeffs[(0,) * ndim]
            assert abs(dc - x.sum() / math.sqrt(x.size)) < 1e-9


def _spectrum_values(tmp_path, n, mode):
    out = tmp_path / f"spectrum_{mode}.csv"
    started = time.perf_counter()
    rc = cli.main(
        ["spectrum", "--n", str(n), "--mode", mode, "--seed", "1", "--out", str(out)]
    )
    elapsed = time.perf_counter() - started
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "index,coefficient"
    values = np.array([float(line.split(",")[1]) for line in lines[1:]])
    return values, elapsed


def test_criterion_6_spectrum_figures(tmp_path, capsys):
    with criterion(capsys, 6, "spectrum traces reproduce DC dominance"):
        values, elapsed = _spectrum_values(tmp_path, 64, "2d")
        assert len(values) == 4096
        matrix = synth_volume("uniform_random", 64, 64, 1, 1)[:, :, 0].astype(float)
        assert values[0] == pytest.approx(64.0 * matrix.mean(), abs=1e-6)
        assert int(np.argmax(np.abs(values))) == 0
        assert elapsed < 5.0

        values, elapsed = _spectrum_values(tmp_path, 16, "3d")
        assert len(values) == 4096
        cube = synth_volume("uniform_random", 16, 16, 16, 1).astype(float)
        assert values[0] == pytest.approx(16.0**1.5 * cube.mean(), abs=1e-6)
        assert int(np.argmax(np.abs(values))) == 0
        assert elapsed < 5.0


def test_criterion_7_entropy_layer(capsys):
    rnd = random.Random(20260822)
    with criterion(capsys, 7, "entropy layer lossless"):
        for value, code in [(0, "1"), (1, "010"), (4, "00101")]:
            w = BitWriter()
            w.write_ue(value)
            assert w.getbits().to01() == code
        for value, code in [(1, "010"), (-1, "011")]:
            w = BitWriter()
            w.write_se(value)
            assert w.getbits().to01() == code
        for _ in range(1000):
            blocks = []
            for _ in range(rnd.randint(1, 3)):
                blocks.append(
                    [
                        RleSymbol(rnd.randint(0, 30), rnd.choice((-1, 1)) * rnd.randint(1, 500))
                        for _ in range(rnd.randint(0, 6))
                    ]
                )
            assert read_symbols(write_symbols(blocks), len(blocks)) == blocks


def _sweep(volume, scan):
    rows = []
    for q in QUANT_SWEEP:
        data = encode_volume(volume, CodecConfig(q, 8, scan))
        rows.append((q, len(data), psnr(volume, decode_volume(data))))
    return rows


def _parse_results_rows(text):
    rows = {}
    pattern = re.compile(r"^(raster3d|zigzag3d|zigzag2d_per_band),(\d+),(\S+)$", re.M)
    for label, size, _ in pattern.findall(text):
        rows[label] = int(size)
    return rows


def test_criterion_8_codec_behavior(capsys):
    vol = synth_volume("smooth", 16, 16, 16, 0)
    with criterion(capsys, 8, "codec quality and scan comparison"):
        sweep = _sweep(vol, ScanKind.ZIGZAG3D)
        sizes = [row[1] for row in sweep]
        quality = [row[2] for row in sweep]
        assert sizes == sorted(sizes, reverse=True)
        assert quality == sorted(quality, reverse=True)

        by_scan = {}
        for scan in ScanKind:
            data = encode_volume(vol, CodecConfig(8, 8, scan))
            by_scan[scan] = (len(data), psnr(vol, decode_volume(data)))
        assert len({p for _, p in by_scan.values()}) == 1  # exact equality
        assert by_scan[ScanKind.ZIGZAG3D][0] <= by_scan[ScanKind.RASTER3D][0]

        # the realized margin lives in the results file; regenerate on first run
        if not RESULTS.exists():
            subprocess.run(
                [sys.executable, str(REPO / "scripts" / "scan_comparison.py")],
                check=True,
            )
        recorded = _parse_results_rows(RESULTS.read_text())
        for scan in ScanKind:
            assert recorded[scan.label] == by_scan[scan][0]


def test_criterion_9_format_stability(tmp_path, capsys):
    vol = synth_volume("smooth", 16, 16, 16, 0)
    config = CodecConfig(8, 8, ScanKind.ZIGZAG3D)
    with criterion(capsys, 9, "format stability"):
        first = encode_volume(vol, config)
        assert encode_volume(vol, config) == first
        if not GOLDEN.exists():  # captured on first run, then guards regressions
            GOLDEN.write_bytes(first)
        assert first == GOLDEN.read_bytes()

        assert np.array_equal(read_vol(write_vol(vol)), vol)
        paths = write_pgm_sequence(vol, tmp_path / "frames")
        assert np.array_equal(read_pgm_sequence(paths), vol)
