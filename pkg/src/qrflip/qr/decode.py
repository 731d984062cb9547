"""Full matrix decoding: format, unmask, deinterleave, RS-correct, parse.

The reader takes the stored format word at face value (it never re-derives
which mask would have been optimal), mirroring how deployed scanners
behave.
"""

from __future__ import annotations

from .codewords import decode_codewords, from_wire
from .config import QrConfig
from .matrix import (FormatUnreadableError, ModuleMatrix, _format_positions,
                     decode_format_info, extract_wire)
from .tables import block_layout


def read_format(matrix: ModuleMatrix) -> tuple[str, int]:
    """(ec_level, mask) from either stored copy of the format word."""
    first, second = _format_positions(matrix.size)
    last_err = None
    for positions in (first, second):
        word = 0
        for i, (r, c) in enumerate(positions):
            word |= matrix.modules[r][c] << i
        try:
            return decode_format_info(word)
        except FormatUnreadableError as exc:
            last_err = exc
    raise last_err


def decode_matrix(matrix: ModuleMatrix) -> tuple[bytes, list[int]]:
    """Decode a clean module grid to (text, per-block corrected error counts)."""
    ec_level, mask = read_format(matrix)
    layout = block_layout(matrix.version, ec_level)
    wire = extract_wire(matrix, mask, layout.total_codewords)
    cws = from_wire(wire, QrConfig(matrix.version, ec_level, mask))
    return decode_codewords(cws)
