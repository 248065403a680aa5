#!/usr/bin/env python3
"""Regenerate the two coefficient-spectrum CSV traces.

A 64x64 random matrix through dct2d + square zigzag, and a 16x16x16
random cube through dct3d + cubic zigzag, both from the pinned seed-1
generator.  Plot index against coefficient with any tool; the DC spike
at index 0 followed by the decaying tail is the point of the figure.
"""

import sys
from pathlib import Path

from zzkit import cli

RESULTS = Path(__file__).resolve().parent.parent / "results"


def main() -> int:
    RESULTS.mkdir(exist_ok=True)
    for n, mode in ((64, "2d"), (16, "3d")):
        out = RESULTS / f"spectrum_{mode}_n{n}_seed1.csv"
        rc = cli.main(
            ["spectrum", "--n", str(n), "--mode", mode, "--seed", "1", "--out", str(out)]
        )
        if rc != 0:
            return rc
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
