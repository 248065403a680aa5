"""Command-line front end.

One binary, six subcommands: scan tables as CSV, spectrum traces,
encode/decode, scan-order comparison, and header inspection.  Machine
output goes to standard output or --out; diagnostics to standard error.
Exit codes: 0 success, 1 usage error, 2 data or format error.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from pathlib import Path

import numpy as np

from .codec import (
    MAGIC as CODEC_MAGIC,
    CodecConfig,
    ScanKind,
    compare_scan_orders,
    decode_volume,
    encode_volume,
    read_header,
)
from .errors import (
    CorruptStreamError,
    DomainError,
    FormatError,
    InvalidDimensionError,
    OversizeError,
    ShapeMismatchError,
)
from .scan_orders import (
    apply_scan,
    cubic_zigzag_order,
    raster_order_3d,
    rect_zigzag_order,
    square_zigzag_order,
)
from .transforms import dct2d, dct3d
from .volume_io import (
    VOLUME_MAGIC,
    SpectrumTrace,
    read_vol,
    synth_volume,
    vol_header,
    write_csv_spectrum,
    write_vol,
)

log = logging.getLogger("zzkit")

_SCAN_CHOICES = tuple(kind.label for kind in ScanKind)
_DATA_ERRORS = (
    FormatError,
    CorruptStreamError,
    InvalidDimensionError,
    ShapeMismatchError,
    DomainError,
    OversizeError,
    OSError,
)


class UsageError(Exception):
    """Bad flag values discovered after parsing; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; 2 is taken by data errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _configure_logging() -> None:
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    chosen = levels.get(os.environ.get("ZZ_LOG", "info").strip().lower(), logging.INFO)
    log.setLevel(chosen)
    log.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.propagate = False


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"bad --dims {text!r}: expected RxC or NxNxN") from None
    if len(dims) not in (2, 3) or min(dims) < 1:
        raise UsageError(f"bad --dims {text!r}: need 2 or 3 positive extents")
    return dims


def _order_for(name: str, dims: tuple[int, ...]):
    if name == "square":
        if len(dims) != 2 or dims[0] != dims[1]:
            raise UsageError("--order square needs --dims NxN")
        return square_zigzag_order(dims[0])
    if name == "rect":
        if len(dims) != 2:
            raise UsageError("--order rect needs --dims RxC (rect is 2D-only)")
        return rect_zigzag_order(dims[0], dims[1])
    if len(dims) != 3 or len(set(dims)) != 1:
        raise UsageError(f"--order {name} needs --dims NxNxN")
    return cubic_zigzag_order(dims[0]) if name == "cube" else raster_order_3d(dims[0])


def cmd_scan(args) -> int:
    dims = _parse_dims(args.dims)
    order = _order_for(args.order, dims)
    lines = ["pos,row,col" if len(dims) == 2 else "pos,row,col,band"]
    lines.extend(
        f"{pos}," + ",".join(str(x) for x in coord) for pos, coord in enumerate(order)
    )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_spectrum(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    n, seed = args.n, args.seed
    if args.mode == "2d":
        volume = synth_volume("uniform_random", n, n, 1, seed)
        coeffs = dct2d(volume[:, :, 0].astype(np.float64))
        values = apply_scan(coeffs, square_zigzag_order(n))
    else:
        volume = synth_volume("uniform_random", n, n, n, seed)
        coeffs = dct3d(volume.astype(np.float64))
        values = apply_scan(coeffs, cubic_zigzag_order(n))
    text = write_csv_spectrum(SpectrumTrace(values, f"dct{args.mode}-n{n}-seed{seed}"))
    Path(args.out).write_text(text)
    log.info("spectrum: wrote %d coefficients to %s", values.size, args.out)
    return 0


def _check_quant(q: int) -> None:
    if not 1 <= q <= 0xFFFF:
        raise UsageError(f"--q must be in [1, 65535], got {q}")


def cmd_encode(args) -> int:
    _check_quant(args.q)
    volume = read_vol(Path(args.infile).read_bytes())
    config = CodecConfig(args.q, args.block, ScanKind.from_label(args.scan))
    data = encode_volume(volume, config)
    Path(args.out).write_bytes(data)
    bps = 8.0 * len(data) / volume.size
    print(f"{args.out}: {len(data)} bytes, {bps:.4f} bits/sample", file=sys.stderr)
    return 0


def cmd_decode(args) -> int:
    volume = decode_volume(Path(args.infile).read_bytes())
    raw = write_vol(volume)
    Path(args.out).write_bytes(raw)
    rows, cols, bands = volume.shape
    print(f"{args.out}: {len(raw)} bytes, {rows}x{cols}x{bands} volume", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    _check_quant(args.q)
    volume = read_vol(Path(args.infile).read_bytes())
    lines = ["scan,bytes,psnr_db"]
    for report in compare_scan_orders(volume, args.block, args.q):
        psnr = "inf" if math.isinf(report.psnr_db) else f"{report.psnr_db:.4f}"
        lines.append(f"{report.scan.label},{report.compressed_bytes},{psnr}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_info(args) -> int:
    data = Path(args.infile).read_bytes()
    if data[:4] == VOLUME_MAGIC:
        rows, cols, bands = vol_header(data)
        print(f"ZZV1 rows={rows} cols={cols} bands={bands}")
    elif data[:4] == CODEC_MAGIC:
        config, (rows, cols, bands) = read_header(data)
        print(
            f"ZZC1 rows={rows} cols={cols} bands={bands}"
            f" block_size={config.block_size} quant_step={config.quant_step}"
            f" scan={config.scan.label}"
        )
    else:
        raise FormatError(f"{args.infile}: unknown magic {data[:4]!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zzkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("scan", help="emit a scan order as CSV on stdout")
    p.add_argument("--dims", required=True, metavar="RxC|NxNxN")
    p.add_argument("--order", required=True, choices=("square", "rect", "cube", "raster"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("spectrum", help="DCT a synthetic volume, zigzag, write CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", required=True, choices=("2d", "3d"))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("encode", help="compress a ZZV1 volume to ZZC1")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--block", type=int, default=8, choices=(2, 4, 8, 16))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--scan", default=ScanKind.ZIGZAG3D.label, choices=_SCAN_CHOICES)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decompress a ZZC1 stream to ZZV1")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("compare", help="encode with every scan order, tabulate results")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--block", type=int, default=8, choices=(2, 4, 8, 16))
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("info", help="print header fields of a ZZV1 or ZZC1 file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors 1 via _Parser
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    except _DATA_ERRORS as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
