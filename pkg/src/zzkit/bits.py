"""MSB-first bit packing and Exp-Golomb variable-length codes."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CorruptStreamError

# Longest accepted Exp-Golomb zero prefix; anything longer is garbage.
_MAX_PREFIX = 63


@dataclass(frozen=True)
class Bits:
    """An immutable bit sequence: ``nbits`` bits, MSB-first in ``data``.

    Unused low-order bits of the final byte are zero.
    """

    data: bytes
    nbits: int

    def to01(self) -> str:
        return "".join(
            str((self.data[i >> 3] >> (7 - (i & 7))) & 1) for i in range(self.nbits)
        )

    @classmethod
    def from01(cls, s: str) -> "Bits":
        w = BitWriter()
        for ch in s:
            if ch not in "01":
                raise ValueError(f"bit string may only contain 0 and 1, got {ch!r}")
            w.write_bit(ch == "1")
        return w.getbits()


class BitWriter:
    """Accumulates bits MSB-first into a bytearray."""

    def __init__(self):
        self._buf = bytearray()
        self._nbits = 0

    def __len__(self) -> int:
        return self._nbits

    def write_bit(self, bit) -> None:
        if self._nbits % 8 == 0:
            self._buf.append(0)
        if bit:
            self._buf[-1] |= 1 << (7 - self._nbits % 8)
        self._nbits += 1

    def write_uint(self, value: int, width: int) -> None:
        for i in range(width - 1, -1, -1):
            self.write_bit((value >> i) & 1)

    def write_ue(self, value: int) -> None:
        """Unsigned Exp-Golomb: value+1 in binary, prefixed by len-1 zeros."""
        if value < 0:
            raise ValueError(f"ue code requires value >= 0, got {value}")
        width = (value + 1).bit_length()
        self.write_uint(0, width - 1)
        self.write_uint(value + 1, width)

    def write_se(self, value: int) -> None:
        """Signed Exp-Golomb: x > 0 maps to 2x-1, x <= 0 maps to -2x."""
        self.write_ue(2 * value - 1 if value > 0 else -2 * value)

    def getbits(self) -> Bits:
        return Bits(bytes(self._buf), self._nbits)


class BitReader:
    """Reads bits MSB-first; raises CorruptStreamError past the end."""

    def __init__(self, bits: Bits):
        self._data = bits.data
        self._nbits = bits.nbits
        self.pos = 0

    @property
    def remaining(self) -> int:
        return self._nbits - self.pos

    def read_bit(self) -> int:
        if self.pos >= self._nbits:
            raise CorruptStreamError("symbol stream: truncated")
        bit = (self._data[self.pos >> 3] >> (7 - (self.pos & 7))) & 1
        self.pos += 1
        return bit

    def read_uint(self, width: int) -> int:
        value = 0
        for _ in range(width):
            value = (value << 1) | self.read_bit()
        return value

    def read_ue(self) -> int:
        zeros = 0
        while self.read_bit() == 0:
            zeros += 1
            if zeros > _MAX_PREFIX:
                raise CorruptStreamError("symbol stream: invalid exp-golomb prefix")
        return (1 << zeros | self.read_uint(zeros)) - 1

    def read_se(self) -> int:
        code = self.read_ue()
        return (code + 1) // 2 if code % 2 else -(code // 2)
