"""Byte-mode data segment construction and parsing.

The bit layout is: 0100 (byte mode), the character count (8 bits for
versions 1..9, 16 for 10..40), the payload bytes, up to four terminator
zero bits, zero-fill to a byte boundary, then alternating pad bytes
236, 17 out to the data-codeword capacity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import QrConfig
from .tables import capacity, char_count_bits, num_data_codewords

BYTE_MODE = 0b0100
PAD_BYTES = (236, 17)


class CapacityOverflowError(ValueError):
    pass


class SegmentParseError(ValueError):
    pass


class _BitWriter:
    def __init__(self) -> None:
        self.bits: list[int] = []

    def put(self, value: int, width: int) -> None:
        for i in reversed(range(width)):
            self.bits.append((value >> i) & 1)

    def to_bytes(self) -> bytes:
        assert len(self.bits) % 8 == 0
        out = bytearray()
        for i in range(0, len(self.bits), 8):
            v = 0
            for b in self.bits[i:i + 8]:
                v = v << 1 | b
            out.append(v)
        return bytes(out)


@dataclass(frozen=True)
class DataSegment:
    version: int
    mode_bits: int
    length_field: int
    payload: bytes
    data_bytes: bytes  # padded to the data-codeword capacity


def build_data_segment(text: bytes, config: QrConfig) -> DataSegment:
    cap = capacity(config.version, config.ec_level)
    if len(text) > cap:
        raise CapacityOverflowError(
            f"{len(text)} bytes exceed capacity {cap} of "
            f"version {config.version}-{config.ec_level}")
    total = num_data_codewords(config.version, config.ec_level)
    w = _BitWriter()
    w.put(BYTE_MODE, 4)
    w.put(len(text), char_count_bits(config.version))
    for b in text:
        w.put(b, 8)
    w.put(0, min(4, total * 8 - len(w.bits)))
    w.put(0, -len(w.bits) % 8)
    data = bytearray(w.to_bytes())
    i = 0
    while len(data) < total:
        data.append(PAD_BYTES[i % 2])
        i += 1
    return DataSegment(config.version, BYTE_MODE, len(text), bytes(text),
                       bytes(data))


def parse_data_bytes(data: bytes, version: int) -> bytes:
    """Extract the payload from decoded data codewords."""
    bits = [(byte >> (7 - i)) & 1 for byte in data for i in range(8)]

    def take(width: int) -> int:
        nonlocal pos
        if pos + width > len(bits):
            raise SegmentParseError("segment truncated")
        v = 0
        for b in bits[pos:pos + width]:
            v = v << 1 | b
        pos += width
        return v

    pos = 0
    mode = take(4)
    if mode != BYTE_MODE:
        raise SegmentParseError(f"mode {mode:04b} is not byte mode")
    length = take(char_count_bits(version))
    if pos + 8 * length > len(bits):
        raise SegmentParseError(f"length field {length} exceeds data")
    return bytes(take(8) for _ in range(length))
