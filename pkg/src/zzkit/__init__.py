"""Zigzag scan orders (2D and 3D), separable orthonormal DCT-II, and a
demonstration volumetric block codec with a small file-format toolbox.
"""

from .bits import BitReader, Bits, BitWriter
from .codec import (
    CodecConfig,
    QualityReport,
    ScanKind,
    compare_scan_orders,
    decode_volume,
    encode_volume,
    psnr,
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
    ScanOrder,
    apply_scan,
    cubic_zigzag_order,
    invert_scan,
    raster_order_3d,
    rect_zigzag_order,
    square_zigzag_order,
)
from .transforms import dct1, dct2d, dct3d, idct1, idct2d, idct3d, naive_dct_oracle
from .volume_io import (
    SplitMix64,
    SpectrumTrace,
    read_pgm_sequence,
    read_vol,
    synth_volume,
    write_csv_spectrum,
    write_pgm_sequence,
    write_vol,
)

__version__ = "0.1.0"

__all__ = [
    "BitReader",
    "Bits",
    "BitWriter",
    "CodecConfig",
    "CorruptStreamError",
    "DomainError",
    "FormatError",
    "InvalidDimensionError",
    "OversizeError",
    "QualityReport",
    "ScanKind",
    "ScanOrder",
    "ShapeMismatchError",
    "SpectrumTrace",
    "SplitMix64",
    "apply_scan",
    "compare_scan_orders",
    "cubic_zigzag_order",
    "dct1",
    "dct2d",
    "dct3d",
    "decode_volume",
    "encode_volume",
    "idct1",
    "idct2d",
    "idct3d",
    "invert_scan",
    "naive_dct_oracle",
    "psnr",
    "raster_order_3d",
    "read_pgm_sequence",
    "read_vol",
    "rect_zigzag_order",
    "square_zigzag_order",
    "synth_volume",
    "write_csv_spectrum",
    "write_pgm_sequence",
    "write_vol",
]
