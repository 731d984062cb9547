"""Per-block Reed-Solomon parity and wire-order interleaving.

Data codewords are split sequentially into the layout's blocks, each block
gets its own parity, and the wire sequence interleaves data bytes
D1, D(k1+1), D2, ... across blocks followed by the interleaved parity
bytes.  Single-block versions degenerate to plain concatenation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from ..rs import DecodeFailure, qr_rs_params, rs_decode, rs_encode
from .config import QrConfig
from .segment import build_data_segment, parse_data_bytes
from .tables import BlockLayout, block_layout


class BlockDecodeFailure(Exception):
    """A block is beyond its correction radius."""

    def __init__(self, block: int, cause: DecodeFailure) -> None:
        super().__init__(f"block {block}: {cause}")
        self.block = block


@dataclass(frozen=True)
class Block:
    data: bytes
    ec: bytes

    @property
    def combined(self) -> bytes:
        return self.data + self.ec


@dataclass(frozen=True)
class CodewordSet:
    version: int
    ec_level: str
    blocks: tuple[Block, ...]

    @property
    def layout(self) -> BlockLayout:
        return block_layout(self.version, self.ec_level)

    @property
    def total_codewords(self) -> int:
        return sum(len(b.data) + len(b.ec) for b in self.blocks)

    @property
    def total_bits(self) -> int:
        return 8 * self.total_codewords

    @property
    def interleaved(self) -> bytes:
        return bytes(self.blocks[b].combined[i]
                     for b, i in wire_order(self.layout))

    def block_bytes(self) -> list[bytearray]:
        return [bytearray(b.combined) for b in self.blocks]


@lru_cache(maxsize=None)
def wire_order(layout: BlockLayout) -> tuple[tuple[int, int], ...]:
    """Wire position -> (block index, offset into that block's data+ec)."""
    order = []
    max_d = max(d for d, _ in layout.blocks)
    for i in range(max_d):
        for b, (d, _) in enumerate(layout.blocks):
            if i < d:
                order.append((b, i))
    max_e = max(e for _, e in layout.blocks)
    for i in range(max_e):
        for b, (d, e) in enumerate(layout.blocks):
            if i < e:
                order.append((b, d + i))
    return tuple(order)


@lru_cache(maxsize=None)
def wire_index(layout: BlockLayout) -> dict[tuple[int, int], int]:
    """(block, offset) -> wire position; inverse of wire_order."""
    return {pos: w for w, pos in enumerate(wire_order(layout))}


def split_data(data: bytes, layout: BlockLayout) -> list[bytes]:
    parts = []
    k = 0
    for d, _ in layout.blocks:
        parts.append(data[k:k + d])
        k += d
    assert k == len(data)
    return parts


def encode(text: bytes, config: QrConfig) -> CodewordSet:
    """Full byte-mode pipeline up to codewords: segment, parity, blocks."""
    layout = block_layout(config.version, config.ec_level)
    segment = build_data_segment(text, config)
    blocks = []
    for part, (d, e) in zip(split_data(segment.data_bytes, layout),
                            layout.blocks):
        cw = rs_encode(qr_rs_params(d + e, d), part)
        blocks.append(Block(cw.data, cw.ec))
    return CodewordSet(config.version, config.ec_level, tuple(blocks))


def deinterleave(wire: bytes, layout: BlockLayout) -> list[bytearray]:
    """Wire bytes back into per-block data+ec sequences."""
    order = wire_order(layout)
    if len(wire) != len(order):
        raise ValueError(f"expected {len(order)} wire bytes, got {len(wire)}")
    blocks = [bytearray(d + e) for d, e in layout.blocks]
    for byte, (b, i) in zip(wire, order):
        blocks[b][i] = byte
    return blocks


def from_wire(wire: bytes, config: QrConfig) -> CodewordSet:
    layout = block_layout(config.version, config.ec_level)
    blocks = tuple(Block(bytes(raw[:d]), bytes(raw[d:]))
                   for raw, (d, _) in zip(deinterleave(wire, layout),
                                          layout.blocks))
    return CodewordSet(config.version, config.ec_level, blocks)


def decode_codewords(cws: CodewordSet) -> tuple[bytes, list[int]]:
    """RS-decode every block and parse the segment.

    Returns (text, per-block corrected error counts).
    """
    layout = cws.layout
    data = bytearray()
    counts = []
    for i, (block, (d, e)) in enumerate(zip(cws.blocks, layout.blocks)):
        try:
            corrected, n_err = rs_decode(qr_rs_params(d + e, d), block.combined)
        except DecodeFailure as exc:
            raise BlockDecodeFailure(i, exc) from exc
        data += corrected[:d]
        counts.append(n_err)
    return parse_data_bytes(bytes(data), cws.version), counts


def codewords_json(cws: CodewordSet, mask: int | None) -> str:
    """Stable JSON emission with bytes as integers 0..255."""
    doc = {
        "version": cws.version,
        "ec": cws.ec_level,
        "mask": mask,
        "blocks": [{"data": list(b.data), "ec": list(b.ec)}
                   for b in cws.blocks],
        "interleaved": list(cws.interleaved),
    }
    return json.dumps(doc, indent=2, sort_keys=False)
