#!/usr/bin/env python3
"""Regenerate results/scan_comparison.md.

Encodes the deterministic smooth 16x16x16 volume with every scan order
and tabulates compressed size and PSNR, then sweeps the quantizer to
show the rate/quality trade-off.  Everything is reproducible, so the
committed results file should match a fresh run byte for byte.
"""

import math
import sys
from pathlib import Path

from zzkit import CodecConfig, ScanKind, decode_volume, encode_volume, psnr, synth_volume

RESULTS = Path(__file__).resolve().parent.parent / "results"
QUANT_SWEEP = (1, 2, 4, 8, 16, 32)


def fmt_psnr(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def main() -> int:
    vol = synth_volume("smooth", 16, 16, 16, 0)

    by_scan = []
    for scan in ScanKind:
        data = encode_volume(vol, CodecConfig(8, 8, scan))
        by_scan.append((scan.label, len(data), psnr(vol, decode_volume(data))))

    sweep = []
    for q in QUANT_SWEEP:
        data = encode_volume(vol, CodecConfig(q, 8, ScanKind.ZIGZAG3D))
        sweep.append((q, len(data), psnr(vol, decode_volume(data))))

    sizes = {label: size for label, size, _ in by_scan}
    zz, ras = sizes["zigzag3d"], sizes["raster3d"]
    margin = ras - zz

    lines = []
    a = lines.append
    a("# Scan order comparison")
    a("")
    a("All inputs are deterministic, so every number in this file reproduces")
    a("exactly on any machine (`python3 scripts/scan_comparison.py`).")
    a("")
    a("Input: built-in `smooth` 16x16x16 volume, block size 8.")
    a("")
    a("## Compressed size by scan order, quant step 8")
    a("")
    a("```csv")
    a("scan,bytes,psnr_db")
    for label, size, p in by_scan:
        a(f"{label},{size},{fmt_psnr(p)}")
    a("```")
    a("")
    a(
        f"zigzag3d vs raster3d: {zz} vs {ras} bytes, margin {margin} bytes"
        f" ({100.0 * margin / ras:.2f}% smaller)."
    )
    a("Reconstruction quality is identical across scan orders by construction;")
    a("the scan only changes the zero-run structure seen by the entropy coder.")
    a("")
    a("## Quality sweep, zigzag3d scan")
    a("")
    a("```csv")
    a("quant_step,bytes,psnr_db")
    for q, size, p in sweep:
        a(f"{q},{size},{fmt_psnr(p)}")
    a("```")
    a("")
    a(f"Realized fidelity at quant step 1: {fmt_psnr(sweep[0][2])} dB.")
    a("")

    RESULTS.mkdir(exist_ok=True)
    out = RESULTS / "scan_comparison.md"
    out.write_text("\n".join(lines))
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
