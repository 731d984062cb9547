"""Version/level capacity and block-structure tables for QR codes 1..40.

These are the published standard constants.  Only byte mode is supported,
so text capacity = data codewords minus the mode/length/terminator
overhead (2 bytes for versions 1..9, 3 for 10..40, since the byte-mode
length field grows from 8 to 16 bits at version 10).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

LEVELS = ("L", "M", "Q", "H")

# Format-information encoding of the level (2 bits).
LEVEL_FORMAT_BITS = {"L": 1, "M": 0, "Q": 3, "H": 2}


class UnsupportedVersionError(ValueError):
    pass


def _check(version: int, ec_level: str | None = None) -> None:
    if not 1 <= version <= 40:
        raise UnsupportedVersionError(f"version {version} out of 1..40")
    if ec_level is not None and ec_level not in LEVELS:
        raise UnsupportedVersionError(f"unknown error correction level {ec_level!r}")


# Error-correction codewords per block, indexed [level][version] (index 0 unused).
ECC_CODEWORDS_PER_BLOCK = {
    "L": (None, 7, 10, 15, 20, 26, 18, 20, 24, 30, 18, 20, 24, 26, 30, 22, 24,
          28, 30, 28, 28, 28, 28, 30, 30, 26, 28, 30, 30, 30, 30, 30, 30, 30,
          30, 30, 30, 30, 30, 30, 30),
    "M": (None, 10, 16, 26, 18, 24, 16, 18, 22, 22, 26, 30, 22, 22, 24, 24, 28,
          28, 26, 26, 26, 26, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28,
          28, 28, 28, 28, 28, 28, 28),
    "Q": (None, 13, 22, 18, 26, 18, 24, 18, 22, 20, 24, 28, 26, 24, 20, 30, 24,
          28, 28, 26, 30, 28, 30, 30, 30, 30, 28, 30, 30, 30, 30, 30, 30, 30,
          30, 30, 30, 30, 30, 30, 30),
    "H": (None, 17, 28, 22, 16, 22, 28, 26, 26, 24, 28, 24, 28, 22, 24, 24, 30,
          28, 28, 26, 28, 30, 24, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30,
          30, 30, 30, 30, 30, 30, 30),
}

# Number of Reed-Solomon blocks, indexed [level][version] (index 0 unused).
NUM_BLOCKS = {
    "L": (None, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 6, 6, 7, 8, 8,
          9, 9, 10, 12, 12, 12, 13, 14, 15, 16, 17, 18, 19, 19, 20, 21, 22,
          24, 25),
    "M": (None, 1, 1, 1, 2, 2, 4, 4, 4, 5, 5, 5, 8, 9, 9, 10, 10, 11, 13, 14,
          16, 17, 17, 18, 20, 21, 23, 25, 26, 28, 29, 31, 33, 35, 37, 38, 40,
          43, 45, 47, 49),
    "Q": (None, 1, 1, 2, 2, 4, 4, 6, 6, 8, 8, 8, 10, 12, 16, 12, 17, 16, 18,
          21, 20, 23, 23, 25, 27, 29, 34, 34, 35, 38, 40, 43, 45, 48, 51, 53,
          56, 59, 62, 65, 68),
    "H": (None, 1, 1, 2, 4, 4, 4, 5, 6, 8, 8, 11, 11, 16, 16, 18, 16, 19, 21,
          25, 25, 25, 34, 30, 32, 35, 37, 40, 42, 45, 48, 51, 54, 57, 60, 63,
          66, 70, 74, 77, 81),
}


def size_for_version(version: int) -> int:
    _check(version)
    return 17 + 4 * version


def raw_codewords(version: int) -> int:
    """Total 8-bit codewords that fit around the function patterns."""
    _check(version)
    modules = (16 * version + 128) * version + 64
    if version >= 2:
        numalign = version // 7 + 2
        modules -= (25 * numalign - 10) * numalign - 55
        if version >= 7:
            modules -= 36  # two version-information blocks
    return modules // 8


def alignment_positions(version: int) -> list[int]:
    """Center coordinates of alignment patterns along each axis."""
    _check(version)
    if version == 1:
        return []
    numalign = version // 7 + 2
    if version == 32:
        step = 26
    else:
        step = (version * 4 + numalign * 2 + 1) // (2 * numalign - 2) * 2
    result = [6]
    pos = version * 4 + 10
    for _ in range(numalign - 1):
        result.insert(1, pos)
        pos -= step
    return result


@dataclass(frozen=True)
class BlockLayout:
    """Per-block (data, ec) byte counts, in wire-split order."""

    version: int
    ec_level: str
    blocks: tuple[tuple[int, int], ...]

    @property
    def total_data(self) -> int:
        return sum(d for d, _ in self.blocks)

    @property
    def total_ec(self) -> int:
        return sum(e for _, e in self.blocks)

    @property
    def total_codewords(self) -> int:
        return self.total_data + self.total_ec


@lru_cache(maxsize=None)
def block_layout(version: int, ec_level: str) -> BlockLayout:
    _check(version, ec_level)
    raw = raw_codewords(version)
    nb = NUM_BLOCKS[ec_level][version]
    ec = ECC_CODEWORDS_PER_BLOCK[ec_level][version]
    short_total = raw // nb
    num_short = nb - raw % nb
    blocks = tuple(
        (short_total - ec + (0 if i < num_short else 1), ec) for i in range(nb))
    return BlockLayout(version, ec_level, blocks)


def num_data_codewords(version: int, ec_level: str) -> int:
    return block_layout(version, ec_level).total_data


def char_count_bits(version: int) -> int:
    """Length-field width for byte mode."""
    _check(version)
    return 8 if version <= 9 else 16


def capacity(version: int, ec_level: str) -> int:
    """Storable text bytes: data codewords minus header and terminator."""
    header_bits = 4 + char_count_bits(version) + 4  # mode + length + terminator
    return num_data_codewords(version, ec_level) - header_bits // 8
