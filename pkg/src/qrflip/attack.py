"""Selective bit-flip manipulation of QR codewords.

A bounded-distance reader corrects up to t byte errors per block, so two
codeword sets differing in D byte positions can be conflated by rewriting
only the |D| - t cheapest positions (cheapest = fewest differing bits):
the reader then "corrects" the rest toward the attacker's target.

Besides diffing and plan construction, this module searches for the
nearest message: the single-byte text change whose conflation needs the
fewest bit flips.  The search evaluates every (position, xor) candidate
through the encoder's response to that byte delta alone; systematic RS
parity is linear over both GF(2) and GF(256), so the delta response
equals a full re-encode (the test suite checks the two routes against
each other), which keeps even version-40 sweeps fast.
"""

from __future__ import annotations

import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf import gf256
from .qr.codewords import (Block, CodewordSet, decode_codewords, encode,
                           wire_index)
from .qr.config import QrConfig
from .qr.matrix import data_path
from .qr.segment import CapacityOverflowError, parse_data_bytes
from .qr.tables import block_layout, capacity, char_count_bits
from .rs import qr_rs_params, rs_encode


class ConfigMismatchError(ValueError):
    pass


class AlreadyEqualError(ValueError):
    pass


class VerificationFailedError(Exception):
    pass


ALPHABETS = {
    "all": frozenset(range(256)),
    "printable": frozenset(range(0x20, 0x7F)),
    "alnum": frozenset((string.ascii_letters + string.digits).encode()),
}


# -- diffing and plans -----------------------------------------------------


@dataclass(frozen=True)
class DiffRow:
    block: int
    index: int  # offset into the block's data+ec bytes
    original: int
    target: int

    @property
    def xor(self) -> int:
        return self.original ^ self.target

    @property
    def bit_cost(self) -> int:
        return self.xor.bit_count()


@dataclass(frozen=True)
class DiffReport:
    version: int
    ec_level: str
    rows: tuple[DiffRow, ...]

    def for_block(self, block: int) -> tuple[DiffRow, ...]:
        return tuple(r for r in self.rows if r.block == block)

    @property
    def total_bit_cost(self) -> int:
        return sum(r.bit_cost for r in self.rows)


def _check_same_config(c1: CodewordSet, c2: CodewordSet) -> None:
    if (c1.version, c1.ec_level) != (c2.version, c2.ec_level):
        raise ConfigMismatchError(
            f"{c1.version}-{c1.ec_level} vs {c2.version}-{c2.ec_level}")


def codeword_diff(c1: CodewordSet, c2: CodewordSet) -> DiffReport:
    """Byte positions where the two codeword sets disagree, with bit costs."""
    _check_same_config(c1, c2)
    rows = []
    for b, (blk1, blk2) in enumerate(zip(c1.blocks, c2.blocks)):
        for i, (x, y) in enumerate(zip(blk1.combined, blk2.combined)):
            if x != y:
                rows.append(DiffRow(b, i, x, y))
    return DiffReport(c1.version, c1.ec_level, tuple(rows))


@dataclass(frozen=True)
class AttackPlan:
    version: int
    ec_level: str
    target_text: bytes
    flips: tuple[DiffRow, ...]  # chosen byte rewrites, block-major order
    pixel_coords: tuple[tuple[int, int], ...] | None = None

    @property
    def total_bit_flips(self) -> int:
        return sum(r.bit_cost for r in self.flips)

    @property
    def total_bits(self) -> int:
        return 8 * block_layout(self.version, self.ec_level).total_codewords

    @property
    def percent_of_total_bits(self) -> float:
        return 100.0 * self.total_bit_flips / self.total_bits


def minimal_flip_plan(c1: CodewordSet, target: CodewordSet) -> AttackPlan:
    """Cheapest per-block byte rewrites that make c1 decode as target.

    Per block with |D| differing positions and correction radius t, the
    |D| - t positions with the fewest differing bits are rewritten to the
    target's bytes (ties broken by ascending index); the t leftovers are
    inside the reader's correction radius.  The cost function is a sum of
    independent non-negative byte costs under a cardinality constraint,
    so this greedy choice is optimal.
    """
    _check_same_config(c1, target)
    report = codeword_diff(c1, target)
    if not report.rows:
        raise AlreadyEqualError("codeword sets are identical")
    layout = c1.layout
    chosen: list[DiffRow] = []
    for b, (_, ec_len) in enumerate(layout.blocks):
        rows = report.for_block(b)
        if not rows:
            continue
        keep = len(rows) - ec_len // 2
        ranked = sorted(rows, key=lambda r: (r.bit_cost, r.index))
        chosen.extend(sorted(ranked[:max(keep, 0)], key=lambda r: r.index))
    target_data = b"".join(blk.data for blk in target.blocks)
    return AttackPlan(c1.version, c1.ec_level,
                      parse_data_bytes(target_data, c1.version),
                      tuple(sorted(chosen, key=lambda r: (r.block, r.index))))


def apply_plan(c1: CodewordSet, plan: AttackPlan) -> CodewordSet:
    """New codeword set with the plan's byte rewrites applied."""
    blocks = c1.block_bytes()
    for r in plan.flips:
        blocks[r.block][r.index] ^= r.xor
    out = []
    for raw, (d, _) in zip(blocks, c1.layout.blocks):
        out.append(Block(bytes(raw[:d]), bytes(raw[d:])))
    return CodewordSet(c1.version, c1.ec_level, tuple(out))


def verify_plan(c1: CodewordSet, plan: AttackPlan) -> bytes:
    """Apply the plan and run the byte-level decode pipeline end to end."""
    if (c1.version, c1.ec_level) != (plan.version, plan.ec_level):
        raise ConfigMismatchError("plan was built for a different config")
    try:
        text, counts = decode_codewords(apply_plan(c1, plan))
    except Exception as exc:
        raise VerificationFailedError(f"decode failed: {exc}") from exc
    for b, (_, ec_len) in enumerate(c1.layout.blocks):
        if counts[b] > ec_len // 2:
            raise VerificationFailedError(
                f"block {b} needed {counts[b]} corrections")
    if text != plan.target_text:
        raise VerificationFailedError(
            f"decoded {text!r}, wanted {plan.target_text!r}")
    return text


def plan_to_pixels(plan: AttackPlan,
                   config: QrConfig) -> list[tuple[int, int]]:
    """(row, col) of every module whose colour the plan toggles.

    Each chosen codeword bit maps through interleaving and the placement
    walk to one matrix cell; masking XORs a constant per cell, so toggling
    works identically under any mask.
    """
    if (plan.version, plan.ec_level) != (config.version, config.ec_level):
        raise ConfigMismatchError("plan was built for a different config")
    layout = block_layout(plan.version, plan.ec_level)
    windex = wire_index(layout)
    path = data_path(plan.version)
    coords = []
    for r in plan.flips:
        w = windex[(r.block, r.index)]
        for k in range(8):  # most significant bit first
            if (r.xor >> (7 - k)) & 1:
                coords.append(path[w * 8 + k])
    return coords


# -- nearest-message search -------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    position: int
    xor: int
    resulting_text: bytes
    bit_flips: int


@dataclass(frozen=True)
class NearestResult:
    version: int
    ec_level: str
    minimum_flips: int
    candidates: tuple[Candidate, ...]  # all minimizers, sorted (position, xor)


_POPCOUNT = np.array([v.bit_count() for v in range(256)], dtype=np.int64)


@lru_cache(maxsize=None)
def _mul_table() -> np.ndarray:
    f = gf256()
    table = np.zeros((256, 256), dtype=np.uint8)
    for a in range(1, 256):
        for b in range(1, 256):
            table[a, b] = f.mul(a, b)
    return table


@lru_cache(maxsize=None)
def _impulse_parities(k: int, ec_len: int) -> np.ndarray:
    """Parity response of a unit byte at each data offset of a (k, ec) block."""
    params = qr_rs_params(k + ec_len, k)
    out = np.zeros((k, ec_len), dtype=np.uint8)
    unit = bytearray(k)
    for j in range(k):
        unit[j] = 1
        out[j] = bytearray(rs_encode(params, bytes(unit)).ec)
        unit[j] = 0
    return out


class _SearchContext:
    """Precomputed per-(version, level) state for candidate cost evaluation."""

    def __init__(self, version: int, ec_level: str) -> None:
        layout = block_layout(version, ec_level)
        self.version = version
        self.ec_level = ec_level
        self.capacity = capacity(version, ec_level)
        # text byte p spans the low nibble of data byte p + offset and the
        # high nibble of the next one (4-bit mode marker, 8- or 16-bit length)
        self.text_offset = 1 if char_count_bits(version) == 8 else 2
        self.owner = []
        for b, (d, _) in enumerate(layout.blocks):
            self.owner.extend((b, j) for j in range(d))
        self.blocks = [(d, e, e // 2, _impulse_parities(d, e))
                       for d, e in layout.blocks]

    def _block_costs(self, deltas: np.ndarray, parity: np.ndarray,
                     t: int) -> np.ndarray:
        """Plan cost per candidate for one block: drop the t dearest bytes."""
        costs = np.concatenate([_POPCOUNT[deltas], _POPCOUNT[parity]], axis=1)
        total = costs.sum(axis=1)
        if t:
            total -= np.sort(costs, axis=1)[:, -t:].sum(axis=1)
        return total

    def costs_for_position(self, p: int) -> np.ndarray:
        """Bit-flip cost of XORing text byte p with v, for v = 1..255."""
        if not 0 <= p < self.capacity:
            raise ValueError(f"text position {p} out of range")
        mul = _mul_table()
        vs = np.arange(1, 256)
        hi = (vs >> 4).astype(np.uint8)
        lo = ((vs & 0xF) << 4).astype(np.uint8)
        j1 = p + self.text_offset
        b1, o1 = self.owner[j1]
        b2, o2 = self.owner[j1 + 1]
        if b1 == b2:
            _, _, t, par = self.blocks[b1]
            parity = mul[hi[:, None], par[o1][None, :]] \
                ^ mul[lo[:, None], par[o2][None, :]]
            return self._block_costs(np.stack([hi, lo], axis=1), parity, t)
        total = np.zeros(255, dtype=np.int64)
        for deltas, b, o in ((hi, b1, o1), (lo, b2, o2)):
            _, _, t, par = self.blocks[b]
            parity = mul[deltas[:, None], par[o][None, :]]
            total += self._block_costs(deltas[:, None], parity, t)
        return total


@lru_cache(maxsize=None)
def _search_context(version: int, ec_level: str) -> _SearchContext:
    return _SearchContext(version, ec_level)


def _costs_for_positions(version: int, ec_level: str,
                         positions: list[int]) -> list[np.ndarray]:
    ctx = _search_context(version, ec_level)
    return [ctx.costs_for_position(p) for p in positions]


def nearest_message(text: bytes, config: QrConfig, alphabet: str = "all",
                    workers: int = 1) -> NearestResult:
    """All single-byte text changes that minimize the conflation bit cost.

    Every (position, xor) pair whose resulting byte stays inside the chosen
    alphabet is evaluated; all global minimizers are returned, sorted by
    (position, xor).
    """
    if alphabet not in ALPHABETS:
        raise ValueError(f"unknown alphabet {alphabet!r}")
    allowed = ALPHABETS[alphabet]
    cap = capacity(config.version, config.ec_level)
    if len(text) > cap:
        raise CapacityOverflowError(f"{len(text)} bytes exceed capacity {cap}")
    positions = list(range(len(text)))
    if workers > 1 and len(positions) > 1:
        chunks = [positions[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_costs_for_positions,
                               [config.version] * len(chunks),
                               [config.ec_level] * len(chunks), chunks)
        cost_by_pos = {}
        for chunk, costs in zip(chunks, results):
            cost_by_pos.update(zip(chunk, costs))
    else:
        ctx = _search_context(config.version, config.ec_level)
        cost_by_pos = {p: ctx.costs_for_position(p) for p in positions}

    best = None
    winners: list[tuple[int, int]] = []
    for p in positions:
        costs = cost_by_pos[p]
        for v in range(1, 256):
            if text[p] ^ v not in allowed:
                continue
            c = int(costs[v - 1])
            if best is None or c < best:
                best, winners = c, [(p, v)]
            elif c == best:
                winners.append((p, v))
    if best is None:
        raise ValueError("alphabet admits no candidate changes")
    candidates = []
    for p, v in sorted(winners):
        changed = bytearray(text)
        changed[p] ^= v
        candidates.append(Candidate(p, v, bytes(changed), best))
    return NearestResult(config.version, config.ec_level, best,
                         tuple(candidates))


def candidate_cost_by_reencoding(text: bytes, position: int, xor: int,
                                 config: QrConfig) -> int:
    """Reference cost route: encode both texts outright, diff, plan."""
    changed = bytearray(text)
    changed[position] ^= xor
    plan = minimal_flip_plan(encode(text, config),
                             encode(bytes(changed), config))
    return plan.total_bit_flips


# -- generalization tables ---------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    position: int
    xors: tuple[int, ...]
    bit_flips: int


def _rows_from_result(result: NearestResult) -> tuple[TableRow, ...]:
    by_pos: dict[int, list[int]] = {}
    for c in result.candidates:
        by_pos.setdefault(c.position, []).append(c.xor)
    return tuple(TableRow(p, tuple(sorted(xs)), result.minimum_flips)
                 for p, xs in sorted(by_pos.items()))


def generalization_table(version: int, ec_level: str, workers: int = 1,
                         seed: int = 2024) -> tuple[TableRow, ...]:
    """Minimum single-byte-change cost for a (version, level), by position.

    Runs the nearest-message search over a maximal-length probe text with
    the unrestricted alphabet, then re-runs with a second (seeded random)
    probe and asserts identical rows: the cost of a fixed (position, xor)
    depends only on the configuration, not the text.
    """
    import random

    cap = capacity(version, ec_level)
    config = QrConfig(version, ec_level)
    probe = bytes((i * 37 + 11) % 256 for i in range(cap))
    rows = _rows_from_result(nearest_message(probe, config, "all", workers))
    rng = random.Random(seed)
    probe2 = bytes(rng.randrange(256) for _ in range(cap))
    rows2 = _rows_from_result(nearest_message(probe2, config, "all", workers))
    if rows != rows2:
        raise AssertionError(
            f"table rows for {version}-{ec_level} depend on the probe text")
    return rows
