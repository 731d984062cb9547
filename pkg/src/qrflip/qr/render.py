"""Matrix rendering: plain PBM (P1) and two-character ASCII art.

PBM output is deterministic: dark = 1, a 4-module quiet zone by default,
one digit row per line with no separators.  The reader accepts any plain
PBM, strips the all-light quiet zone, and rebuilds the function-module
grid from the symbol size.
"""

from __future__ import annotations

from .matrix import ModuleMatrix, function_template

QUIET_ZONE = 4


def to_pbm(matrix: ModuleMatrix, border: int = QUIET_ZONE) -> str:
    if border < 0:
        raise ValueError("border must be non-negative")
    n = matrix.size + 2 * border
    lines = [f"P1", f"{n} {n}"]
    blank = "0" * n
    for _ in range(border):
        lines.append(blank)
    for row in matrix.modules:
        lines.append("0" * border + "".join(str(v) for v in row) + "0" * border)
    for _ in range(border):
        lines.append(blank)
    return "\n".join(lines) + "\n"


def from_pbm(text: str) -> ModuleMatrix:
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens or tokens[0] != "P1":
        raise ValueError("not a plain PBM (P1) file")
    width, height = int(tokens[1]), int(tokens[2])
    digits = [ch for tok in tokens[3:] for ch in tok]
    if len(digits) != width * height or set(digits) - {"0", "1"}:
        raise ValueError("malformed PBM raster")
    grid = [[int(digits[r * width + c]) for c in range(width)]
            for r in range(height)]

    # strip the all-light quiet zone; finder corners keep the edges dark
    rows = [r for r in range(height) if any(grid[r])]
    cols = [c for c in range(width) if any(row[c] for row in grid)]
    if not rows:
        raise ValueError("blank image")
    r0, r1, c0, c1 = rows[0], rows[-1], cols[0], cols[-1]
    size = r1 - r0 + 1
    if size != c1 - c0 + 1 or not 21 <= size <= 177 or (size - 17) % 4:
        raise ValueError(f"trimmed raster {size} is not a QR symbol size")
    version = (size - 17) // 4
    m = function_template(version).copy()
    for r in range(size):
        m.modules[r][:] = bytes(grid[r0 + r][c0:c1 + 1])
    return m


def to_ascii(matrix: ModuleMatrix, dark: str = "##", light: str = "  ") -> str:
    return "\n".join("".join(dark if v else light for v in row)
                     for row in matrix.modules) + "\n"
