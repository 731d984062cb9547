"""Module matrix: function patterns, placement, masking, format information.

Cells are addressed (row, col) with (0, 0) top-left; 1 is dark.  Function
modules (finders, separators, timing, alignment, the dark module, and the
format/version areas) are tracked in a parallel grid so masking and the
zig-zag data walk never touch them.
"""

from __future__ import annotations

from functools import lru_cache

from .codewords import CodewordSet, wire_order
from .config import QrConfig
from .tables import (LEVEL_FORMAT_BITS, LEVELS, alignment_positions,
                     block_layout, size_for_version)


class LayoutMismatchError(ValueError):
    pass


class FormatUnreadableError(Exception):
    pass


FORMAT_MASK = 0x5412  # XORed onto every 15-bit format word

# Mask predicates: cell (r, c) is flipped when the predicate is zero.
MASK_PREDICATES = (
    lambda r, c: (r + c) % 2,
    lambda r, c: r % 2,
    lambda r, c: c % 3,
    lambda r, c: (r + c) % 3,
    lambda r, c: (r // 2 + c // 3) % 2,
    lambda r, c: (r * c) % 2 + (r * c) % 3,
    lambda r, c: ((r * c) % 2 + (r * c) % 3) % 2,
    lambda r, c: ((r + c) % 2 + (r * c) % 3) % 2,
)

PENALTY_N1 = 3
PENALTY_N2 = 3
PENALTY_N3 = 40
PENALTY_N4 = 10


class ModuleMatrix:
    """Square grid of dark/light modules plus the function-module mask."""

    def __init__(self, version: int, modules=None, is_function=None) -> None:
        self.version = version
        self.size = size_for_version(version)
        self.modules = modules or [bytearray(self.size) for _ in range(self.size)]
        self.is_function = (is_function
                            or [bytearray(self.size) for _ in range(self.size)])
        self.mask: int | None = None
        self.ec_level: str | None = None

    def get(self, row: int, col: int) -> int:
        return self.modules[row][col]

    def copy(self) -> "ModuleMatrix":
        m = ModuleMatrix(self.version,
                         [bytearray(r) for r in self.modules],
                         [bytearray(r) for r in self.is_function])
        m.mask = self.mask
        m.ec_level = self.ec_level
        return m

    def toggle(self, row: int, col: int) -> None:
        self.modules[row][col] ^= 1


# -- format / version information -----------------------------------------


def format_info(ec_level: str, mask: int) -> int:
    """15-bit format word: 2 level bits, 3 mask bits, 10 BCH parity bits."""
    data = LEVEL_FORMAT_BITS[ec_level] << 3 | mask
    rem = data
    for _ in range(10):
        rem = (rem << 1) ^ ((rem >> 9) * 0x537)
    return (data << 10 | rem) ^ FORMAT_MASK


@lru_cache(maxsize=None)
def _format_words() -> dict[int, tuple[str, int]]:
    return {format_info(lv, m): (lv, m) for lv in LEVELS for m in range(8)}


def decode_format_info(word: int) -> tuple[str, int]:
    """Nearest valid format word; the BCH(15, 5) distance-7 code corrects 3."""
    table = _format_words()
    if word in table:
        return table[word]
    best, best_d = None, 16
    for w, lm in table.items():
        d = bin(w ^ word).count("1")
        if d < best_d:
            best, best_d = lm, d
    if best_d > 3:
        raise FormatUnreadableError(f"format word {word:015b} unreadable")
    return best


def _version_info(version: int) -> int:
    rem = version
    for _ in range(12):
        rem = (rem << 1) ^ ((rem >> 11) * 0x1F25)
    return version << 12 | rem


# -- function patterns and placement ----------------------------------------


def _format_positions(size: int) -> tuple[list[tuple[int, int]],
                                          list[tuple[int, int]]]:
    """Module coordinates of the two format-word copies, bit 0 first."""
    first = [(i, 8) for i in range(6)] + [(7, 8), (8, 8), (8, 7)] + \
            [(8, 14 - i) for i in range(9, 15)]
    second = [(8, size - 1 - i) for i in range(8)] + \
             [(size - 15 + i, 8) for i in range(8, 15)]
    return first, second


def _draw_function_patterns(m: ModuleMatrix) -> None:
    size = m.size

    def set_function(row: int, col: int, dark: int) -> None:
        m.modules[row][col] = dark
        m.is_function[row][col] = 1

    for i in range(size):  # timing
        set_function(6, i, i % 2 == 0)
        set_function(i, 6, i % 2 == 0)

    # finder patterns with separators (ring at radius 2 and 4 is light)
    for cr, cc in ((3, 3), (3, size - 4), (size - 4, 3)):
        for dr in range(-4, 5):
            for dc in range(-4, 5):
                r, c = cr + dr, cc + dc
                if 0 <= r < size and 0 <= c < size:
                    set_function(r, c, max(abs(dr), abs(dc)) not in (2, 4))

    positions = alignment_positions(m.version)
    num = len(positions)
    for i in range(num):
        for j in range(num):
            if (i, j) in ((0, 0), (0, num - 1), (num - 1, 0)):
                continue
            cr, cc = positions[i], positions[j]
            for dr in range(-2, 3):
                for dc in range(-2, 3):
                    set_function(cr + dr, cc + dc, max(abs(dr), abs(dc)) != 1)

    for pos in _format_positions(size):  # reserve format areas
        for r, c in pos:
            set_function(r, c, 0)
    set_function(size - 8, 8, 1)  # dark module

    if m.version >= 7:
        bits = _version_info(m.version)
        for i in range(18):
            bit = (bits >> i) & 1
            a, b = size - 11 + i % 3, i // 3
            set_function(a, b, bit)
            set_function(b, a, bit)


@lru_cache(maxsize=None)
def function_template(version: int) -> ModuleMatrix:
    """Matrix with only the function patterns drawn (format area zeroed)."""
    m = ModuleMatrix(version)
    _draw_function_patterns(m)
    return m


@lru_cache(maxsize=None)
def data_path(version: int) -> tuple[tuple[int, int], ...]:
    """Zig-zag traversal of all non-function cells: bit i lives at path[i]."""
    template = function_template(version)
    size = template.size
    path = []
    col = size - 1
    while col > 0:
        if col == 6:
            col -= 1
        upward = ((col + 1) & 2) == 0
        for vert in range(size):
            row = size - 1 - vert if upward else vert
            for c in (col, col - 1):
                if not template.is_function[row][c]:
                    path.append((row, c))
        col -= 2
    return tuple(path)


def _stamp_format(m: ModuleMatrix, ec_level: str, mask: int) -> None:
    word = format_info(ec_level, mask)
    first, second = _format_positions(m.size)
    for i, (r, c) in enumerate(first):
        m.modules[r][c] = (word >> i) & 1
    for i, (r, c) in enumerate(second):
        m.modules[r][c] = (word >> i) & 1


def _mask_in_place(m: ModuleMatrix, mask_id: int) -> None:
    pred = MASK_PREDICATES[mask_id]
    for r in range(m.size):
        mod = m.modules[r]
        fun = m.is_function[r]
        for c in range(m.size):
            if not fun[c] and pred(r, c) == 0:
                mod[c] ^= 1


def apply_mask(matrix: ModuleMatrix, mask_id: int) -> ModuleMatrix:
    """XOR the mask pattern over the data region (an involution)."""
    if not 0 <= mask_id <= 7:
        raise ValueError(f"mask {mask_id} out of 0..7")
    out = matrix.copy()
    _mask_in_place(out, mask_id)
    return out


def penalty_score(m: ModuleMatrix) -> int:
    """Standard N1..N4 penalty used to pick the least-bad mask."""
    size = m.size
    result = 0

    for r in range(size):  # N1 rows
        run, prev = 0, None
        for c in range(size):
            v = m.modules[r][c]
            if v == prev:
                run += 1
                if run == 5:
                    result += PENALTY_N1
                elif run > 5:
                    result += 1
            else:
                prev, run = v, 1
    for c in range(size):  # N1 columns
        run, prev = 0, None
        for r in range(size):
            v = m.modules[r][c]
            if v == prev:
                run += 1
                if run == 5:
                    result += PENALTY_N1
                elif run > 5:
                    result += 1
            else:
                prev, run = v, 1

    for r in range(size - 1):  # N2: 2x2 same-colour blocks
        for c in range(size - 1):
            if (m.modules[r][c] == m.modules[r][c + 1]
                    == m.modules[r + 1][c] == m.modules[r + 1][c + 1]):
                result += PENALTY_N2

    for r in range(size):  # N3: finder-like runs in rows
        bits = 0
        for c in range(size):
            bits = ((bits << 1) & 0x7FF) | m.modules[r][c]
            if c >= 10 and bits in (0x05D, 0x5D0):
                result += PENALTY_N3
    for c in range(size):  # N3 in columns
        bits = 0
        for r in range(size):
            bits = ((bits << 1) & 0x7FF) | m.modules[r][c]
            if r >= 10 and bits in (0x05D, 0x5D0):
                result += PENALTY_N3

    dark = sum(sum(row) for row in m.modules)
    total = size * size
    k = 0
    while not (9 - k) * total <= dark * 20 <= (11 + k) * total:
        result += PENALTY_N4
        k += 1
    return result


def build_matrix(codewords: CodewordSet, config: QrConfig) -> ModuleMatrix:
    """Place codeword bits, choose/stamp the mask, stamp format info."""
    if (codewords.version, codewords.ec_level) != (config.version,
                                                   config.ec_level):
        raise LayoutMismatchError(
            f"codewords are {codewords.version}-{codewords.ec_level}, "
            f"config is {config.version}-{config.ec_level}")
    layout = block_layout(config.version, config.ec_level)
    if tuple((len(b.data), len(b.ec)) for b in codewords.blocks) != layout.blocks:
        raise LayoutMismatchError("block sizes do not match the layout")

    m = function_template(config.version).copy()
    wire = codewords.interleaved
    path = data_path(config.version)
    for i in range(len(wire) * 8):
        r, c = path[i]
        m.modules[r][c] = (wire[i >> 3] >> (7 - (i & 7))) & 1

    if config.mask is None:
        best_mask, best_penalty = 0, None
        for mask in range(8):
            _stamp_format(m, config.ec_level, mask)
            _mask_in_place(m, mask)
            p = penalty_score(m)
            _mask_in_place(m, mask)  # XOR undoes it
            if best_penalty is None or p < best_penalty:
                best_mask, best_penalty = mask, p
        mask = best_mask
    else:
        mask = config.mask

    _stamp_format(m, config.ec_level, mask)
    _mask_in_place(m, mask)
    m.mask = mask
    m.ec_level = config.ec_level
    return m


def extract_wire(matrix: ModuleMatrix, mask: int, n_codewords: int) -> bytes:
    """Unmask and read the first n_codewords bytes along the data path."""
    pred = MASK_PREDICATES[mask]
    path = data_path(matrix.version)
    out = bytearray(n_codewords)
    for i in range(n_codewords * 8):
        r, c = path[i]
        bit = matrix.modules[r][c] ^ (pred(r, c) == 0)
        out[i >> 3] |= bit << (7 - (i & 7))
    return bytes(out)
