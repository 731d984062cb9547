"""Generic block-code utilities.

Distance and weight, brute-force minimum-distance verification, cyclic-code
generator/parity-check matrices, minimal polynomials over a subfield, BCH
generator construction, and the Spanish NIF checksum.

Vectors are plain sequences of field elements (ints); matrices are lists of
such rows.  Everything here is an exact, enumeration-friendly oracle rather
than a production decoder: block lengths stay at or below 255 throughout.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf import Field, gf2
from .poly import Poly, poly_lcm, x_pow_n_minus_1


class LengthMismatchError(ValueError):
    pass


class TooFewWordsError(ValueError):
    pass


class NotADivisorError(ValueError):
    pass


class DeltaOutOfRangeError(ValueError):
    pass


class BadFormatError(ValueError):
    pass


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of positions where u and v differ."""
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} != {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def weight(v: Sequence[int]) -> int:
    """Number of nonzero positions."""
    return sum(a != 0 for a in v)


def min_distance_bruteforce(codewords: Iterable[Sequence[int]],
                            linear: bool = False) -> int:
    """Exact minimum pairwise distance by full enumeration.

    With linear=True, additionally computes the minimum nonzero weight and
    asserts it equals the pairwise minimum (d(C) = w(C) for linear codes).
    """
    words = np.asarray([list(w) for w in codewords])
    if len(words) < 2:
        raise TooFewWordsError("need at least two codewords")
    best = words.shape[1]
    for i in range(len(words) - 1):
        d = int((words[i + 1:] != words[i]).sum(axis=1).min())
        if d < best:
            best = d
    if linear:
        weights = (words != 0).sum(axis=1)
        w = int(weights[weights > 0].min())
        if w != best:
            raise AssertionError(
                f"linear code has min distance {best} but min weight {w}")
    return best


def detect_correct_capability(d: int) -> tuple[int, int]:
    """(correctable errors t, detect-only budget) for minimum distance d."""
    if d < 1:
        raise ValueError(f"minimum distance {d} < 1")
    return (d - 1) // 2, d - 1


# -- cyclic codes -------------------------------------------------------


def _require_divisor(g: Poly, n: int) -> None:
    if g.is_zero() or not (x_pow_n_minus_1(g.field, n) % g).is_zero():
        raise NotADivisorError(f"{g!r} does not divide x^{n} - 1")


def cyclic_generator_matrix(g: Poly, n: int) -> list[list[int]]:
    """k x n generator matrix with rows g, xg, ..., x^(k-1) g, k = n - deg g."""
    _require_divisor(g, n)
    k = n - len(g.coeffs) + 1
    return [[0] * i + list(g.coeffs) + [0] * (n - len(g.coeffs) - i)
            for i in range(k)]


def parity_check_matrix(g: Poly, n: int) -> list[list[int]]:
    """(n-k) x n matrix H with H.G^T = 0, built from h(x) = (x^n - 1)/g(x).

    Rows are shifts of the reversed coefficients of h; any full-rank H with
    the annihilation property would do, since only membership testing is
    required of it.
    """
    _require_divisor(g, n)
    h = x_pow_n_minus_1(g.field, n) // g
    rev = list(reversed(h.coeffs))
    r = n - len(h.coeffs) + 1  # = deg g
    return [[0] * i + rev + [0] * (n - len(rev) - i) for i in range(r)]


def matvec(matrix: Sequence[Sequence[int]], vec: Sequence[int],
           field: Field) -> list[int]:
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vec):
            acc ^= field.mul(a, b)
        out.append(acc)
    return out


def is_codeword(h_matrix: Sequence[Sequence[int]], word: Sequence[int],
                field: Field) -> bool:
    """Membership test: w is in the code iff H.w = 0."""
    if h_matrix and len(h_matrix[0]) != len(word):
        raise LengthMismatchError(
            f"word length {len(word)} != {len(h_matrix[0])}")
    return all(s == 0 for s in matvec(h_matrix, word, field))


def span(matrix: Sequence[Sequence[int]], field: Field):
    """Yield every word in the row span (q^k words; keep k small)."""
    k = len(matrix)
    n = len(matrix[0])
    for idx in range(field.q ** k):
        word = [0] * n
        rest = idx
        for row in matrix:
            c = rest % field.q
            rest //= field.q
            if c:
                for j, a in enumerate(row):
                    word[j] ^= field.mul(c, a)
        yield tuple(word)


# -- minimal polynomials and BCH ----------------------------------------


def minimal_polynomial(field: Field, elem: int, base: Field | None = None) -> Poly:
    """Monic minimal polynomial of elem over the base field.

    base=None means GF(2): the polynomial is the product over the conjugacy
    class {elem^(2^j)} and its coefficients land in {0, 1}.  Passing the
    field itself gives the trivial (x - elem) of the order-1 extension.
    """
    if elem == 0:
        raise ValueError("zero is not handled; its minimal polynomial is x")
    if base is None:
        base = gf2()
    if base == field:
        return Poly(field, (elem, 1))
    if base.q != 2:
        raise ValueError("only GF(2) or the field itself are supported bases")
    conjugates = [elem]
    e = field.mul(elem, elem)
    while e != elem:
        conjugates.append(e)
        e = field.mul(e, e)
    prod = Poly.one(field)
    for c in conjugates:
        prod = prod * Poly(field, (c, 1))
    if any(c not in (0, 1) for c in prod.coeffs):
        raise AssertionError(f"conjugate product {prod!r} not over GF(2)")
    return Poly(base, prod.coeffs)


def bch_generator(field: Field, delta: int, base: Field | None = None) -> Poly:
    """Generator polynomial: lcm of the minimal polynomials of alpha^1..alpha^(delta-1)."""
    if not 2 <= delta <= field.q - 1:
        raise DeltaOutOfRangeError(f"designed distance {delta} out of [2, {field.q - 1}]")
    g = Poly.one(gf2() if base is None else base)
    for i in range(1, delta):
        g = poly_lcm(g, minimal_polynomial(field, field.alpha_pow(i), base))
    return g


# -- NIF checksum --------------------------------------------------------

# Control letter for each residue class mod 23, residue 0 first.
NIF_LETTERS = "TRWAGMYFPDXBNJZSQVHLCKE"


def nif_control_letter(digits: str) -> str:
    """Control letter of an 8-digit Spanish tax number."""
    if len(digits) != 8 or not digits.isascii() or not digits.isdigit():
        raise BadFormatError(f"expected exactly 8 decimal digits, got {digits!r}")
    return NIF_LETTERS[int(digits) % 23]
