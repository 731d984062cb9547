"""Dense polynomial arithmetic over a Field.

Coefficients are stored in ascending degree (coeffs[i] multiplies x^i),
so index i of a codeword vector is exactly the coefficient of x^i.
Polynomials are normalized after every operation: the leading coefficient
is nonzero, and the zero polynomial is the empty tuple with degree
-infinity.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import Field

NEG_INF = float("-inf")


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls(field, (0,) * degree + (coeff,))

    # -- structure ------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.field.add(out[i], c)
        return Poly(self.field, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        mul = self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= mul(a, b)
        return Poly(self.field, out)

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return Poly(self.field, (mul(a, c) for a in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (prepend k zero coefficients)."""
        if self.is_zero():
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, den: "Poly") -> tuple["Poly", "Poly"]:
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dd = len(den.coeffs) - 1
        if len(rem) - 1 < dd:
            return Poly.zero(field), self
        quot = [0] * (len(rem) - dd)
        lead_inv = field.inv(den.coeffs[-1])
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = field.mul(c, lead_inv)
            quot[i - dd] = f
            for j, d in enumerate(den.coeffs):
                rem[i - dd + j] ^= field.mul(f, d)
        return Poly(field, quot), Poly(field, rem)

    def __floordiv__(self, den: "Poly") -> "Poly":
        return divmod(self, den)[0]

    def __mod__(self, den: "Poly") -> "Poly":
        return divmod(self, den)[1]

    def eval(self, x: int) -> int:
        """Horner evaluation at a field element."""
        acc = 0
        field = self.field
        for c in reversed(self.coeffs):
            acc = field.mul(acc, x) ^ c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly)
                and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)


def from_vector(field: Field, vec: Sequence[int]) -> Poly:
    """Codeword vector to polynomial: vec[i] is the coefficient of x^i."""
    return Poly(field, vec)


def to_vector(p: Poly, n: int) -> tuple[int, ...]:
    """Polynomial back to a length-n coefficient vector."""
    if len(p.coeffs) > n:
        raise ValueError(f"degree {p.degree} does not fit in length {n}")
    return p.coeffs + (0,) * (n - len(p.coeffs))


def x_pow_n_minus_1(field: Field, n: int) -> Poly:
    return Poly(field, (1,) + (0,) * (n - 1) + (1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()
