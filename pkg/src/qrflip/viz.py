"""Matplotlib figure rendering for the report paths.

Two figures back the CLI reports: the manipulation diagram (the symbol
with the to-flip modules highlighted) and the per-level summary of the
generalization table.  Rendering is headless; figures go straight to
files.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.patches import Rectangle

from .attack import TableRow
from .qr.matrix import ModuleMatrix

FLIP_COLOR = "#1f5fd0"


def save_attack_figure(matrix: ModuleMatrix,
                       pixels: Iterable[tuple[int, int]], path: str,
                       title: str | None = None) -> None:
    """Render the symbol with the modules to toggle highlighted."""
    grid = np.array([[1 - v for v in row] for row in matrix.modules])
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(grid, cmap="gray", vmin=0, vmax=1, interpolation="nearest")
    for r, c in pixels:
        ax.add_patch(Rectangle((c - 0.5, r - 0.5), 1, 1,
                               facecolor=FLIP_COLOR, edgecolor="none",
                               alpha=0.85))
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def save_table_figure(rows_by_level: dict[str, Sequence[TableRow]],
                      version: int, path: str) -> None:
    """Bar chart of the minimum bit flips per error-correction level."""
    levels = list(rows_by_level)
    flips = [rows[0].bit_flips if rows else 0
             for rows in rows_by_level.values()]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    bars = ax.bar(levels, flips, color="#444444")
    ax.bar_label(bars)
    ax.set_xlabel("error correction level")
    ax.set_ylabel("minimum bit flips")
    ax.set_title(f"Cheapest single-byte change, version {version}")
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
