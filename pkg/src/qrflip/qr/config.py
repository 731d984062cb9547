"""QR generation parameters."""

from __future__ import annotations

from dataclasses import dataclass

from .tables import LEVELS, UnsupportedVersionError


@dataclass(frozen=True)
class QrConfig:
    """Version 1..40, level L/M/Q/H, and mask 0..7 (None = pick by penalty)."""

    version: int
    ec_level: str
    mask: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.version <= 40:
            raise UnsupportedVersionError(f"version {self.version} out of 1..40")
        if self.ec_level not in LEVELS:
            raise UnsupportedVersionError(f"unknown level {self.ec_level!r}")
        if self.mask is not None and not 0 <= self.mask <= 7:
            raise ValueError(f"mask {self.mask} out of 0..7")

    @property
    def size(self) -> int:
        return 17 + 4 * self.version
