"""Reed-Solomon RS(n, k) systematic encoder and bounded-distance decoder.

The code is defined over a GF(2^m) field with generator polynomial
g(x) = prod_{i=0}^{ec_len-1} (x - alpha^(first_root + i)).  first_root
defaults to 0, the convention used by QR codes.  Codewords are byte
sequences in wire order: data first, parity last, with data[0] the
coefficient of x^(n-1).

Shortened codes (n < q - 1) behave as if the data were left-padded with
zeros to the full length; the parity of the short message equals the
parity of the padded one.

Decoding is the standard chain: syndrome computation, Berlekamp-Massey
error-locator synthesis, Chien root search, Forney magnitudes.  Anything
beyond t = ec_len // 2 symbol errors raises DecodeFailure rather than
risking a miscorrection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gf import Field, gf256
from .poly import Poly


class BadDimensionsError(ValueError):
    pass


class DecodeFailure(Exception):
    """More errors than the code can correct (retransmission territory)."""


class RsParams:
    """Immutable parameters of one RS(n, k) code."""

    __slots__ = ("field", "n", "k", "ec_len", "first_root", "generator",
                 "_gen_desc")

    def __init__(self, field: Field, n: int, k: int, first_root: int = 0) -> None:
        if not 0 < k < n <= field.q - 1:
            raise BadDimensionsError(
                f"need 0 < k < n <= {field.q - 1}, got n={n} k={k}")
        self.field = field
        self.n = n
        self.k = k
        self.ec_len = n - k
        self.first_root = first_root
        # g(x) as a descending coefficient list, built by multiplying out
        # the root factors; kept monic by construction.
        gen = [1]
        for i in range(self.ec_len):
            root = field.alpha_pow(first_root + i)
            nxt = [0] * (len(gen) + 1)
            for j, c in enumerate(gen):
                nxt[j] ^= c
                nxt[j + 1] ^= field.mul(c, root)
            gen = nxt
        self._gen_desc = tuple(gen)
        self.generator = Poly(field, tuple(reversed(gen)))

    @property
    def designed_distance(self) -> int:
        return self.ec_len + 1

    @property
    def t(self) -> int:
        """Correctable symbol errors: floor((d - 1) / 2) with d = ec_len + 1."""
        return self.ec_len // 2

    def __repr__(self) -> str:
        return (f"RsParams(n={self.n}, k={self.k}, "
                f"first_root={self.first_root}, q={self.field.q})")


@lru_cache(maxsize=None)
def rs_params(field: Field, n: int, k: int, first_root: int = 0) -> RsParams:
    return RsParams(field, n, k, first_root)


@lru_cache(maxsize=None)
def qr_rs_params(n: int, k: int) -> RsParams:
    """The RS code QR uses for an (n, k) block: GF(256), first root alpha^0."""
    return rs_params(gf256(), n, k, 0)


@dataclass(frozen=True)
class RsCodeword:
    data: bytes
    ec: bytes

    @property
    def combined(self) -> bytes:
        return self.data + self.ec


def rs_encode(params: RsParams, data: Sequence[int]) -> RsCodeword:
    """Systematic encode: parity = (data(x) * x^ec_len) mod g(x)."""
    if len(data) != params.k:
        raise ValueError(f"expected {params.k} data symbols, got {len(data)}")
    field = params.field
    exp, log, modulus = field.exp, field.log, field.q - 1
    gen = params._gen_desc
    msg = list(data) + [0] * params.ec_len
    for i in range(params.k):
        c = msg[i]
        if c:
            lc = log[c - 1]
            for j in range(1, len(gen)):
                g = gen[j]
                if g:
                    msg[i + j] ^= exp[(lc + log[g - 1]) % modulus]
    return RsCodeword(bytes(data), bytes(msg[params.k:]))


def syndromes(params: RsParams, received: Sequence[int]) -> list[int]:
    """Evaluations at the generator roots; all zero iff a codeword."""
    if len(received) != params.n:
        raise ValueError(f"expected {params.n} symbols, got {len(received)}")
    field = params.field
    out = []
    for i in range(params.ec_len):
        a = field.alpha_pow(params.first_root + i)
        acc = 0
        for byte in received:
            acc = field.mul(acc, a) ^ byte
        out.append(acc)
    return out


def _berlekamp_massey(field: Field, synd: Sequence[int]) -> list[int]:
    """Minimal LFSR (error locator, ascending coefficients, sigma[0] = 1)."""
    sigma = [1]
    prev = [1]
    length = 0
    m = 1
    b = 1
    for i, s in enumerate(synd):
        # discrepancy of the current LFSR against syndrome i
        d = s
        for j in range(1, length + 1):
            if j < len(sigma) and sigma[j]:
                d ^= field.mul(sigma[j], synd[i - j])
        if d == 0:
            m += 1
            continue
        coef = field.div(d, b)
        update = [0] * m + [field.mul(coef, c) for c in prev]
        if 2 * length <= i:
            prev = list(sigma)
            length = i + 1 - length
            b = d
            m = 1
        else:
            m += 1
        if len(update) > len(sigma):
            sigma = sigma + [0] * (len(update) - len(sigma))
        for j, c in enumerate(update):
            sigma[j] ^= c
    while sigma and sigma[-1] == 0:
        sigma.pop()
    return sigma


def rs_decode(params: RsParams, received: Sequence[int]) -> tuple[bytes, int]:
    """Correct up to t symbol errors; return (codeword, error count).

    Raises DecodeFailure when the received word is not within distance t of
    any codeword (detection), or when the locator is inconsistent.
    """
    field = params.field
    synd = syndromes(params, received)
    if not any(synd):
        return bytes(received), 0

    sigma = _berlekamp_massey(field, synd)
    n_errors = len(sigma) - 1
    if n_errors == 0 or n_errors > params.t:
        raise DecodeFailure(f"locator degree {n_errors} exceeds t={params.t}")

    # Chien search over the n valid degree positions only; a root landing
    # outside the shortened range shows up as a count mismatch below.
    positions = []  # degree of x in the error polynomial
    for p in range(params.n):
        x_inv = field.alpha_pow(-p)
        acc = 0
        for c in reversed(sigma):
            acc = field.mul(acc, x_inv) ^ c
        if acc == 0:
            positions.append(p)
    if len(positions) != n_errors:
        raise DecodeFailure(
            f"found {len(positions)} locator roots for degree {n_errors}")

    # Forney: omega = S(x) sigma(x) mod x^ec_len, then per-root magnitudes.
    omega = [0] * params.ec_len
    for i, s in enumerate(synd):
        if s == 0:
            continue
        for j, c in enumerate(sigma):
            if i + j < params.ec_len and c:
                omega[i + j] ^= field.mul(s, c)
    sigma_deriv = [sigma[j] for j in range(1, len(sigma), 2)]  # odd terms / x

    corrected = list(received)
    b = params.first_root
    for p in positions:
        x_inv = field.alpha_pow(-p)
        om = 0
        for c in reversed(omega):
            om = field.mul(om, x_inv) ^ c
        dv = 0
        x_inv_sq = field.mul(x_inv, x_inv)
        for c in reversed(sigma_deriv):
            dv = field.mul(dv, x_inv_sq) ^ c
        if dv == 0:
            raise DecodeFailure("zero locator derivative at a root")
        magnitude = field.mul(field.pow(field.alpha_pow(p), 1 - b),
                              field.div(om, dv))
        corrected[params.n - 1 - p] ^= magnitude

    if any(syndromes(params, corrected)):
        raise DecodeFailure("corrected word is not a codeword")
    return bytes(corrected), n_errors
