"""Binary-extension Galois field arithmetic GF(2^m).

Elements are plain integers in [0, 2^m): bit i is the coefficient of x^i
in the residue-class representative, so the integer doubles as the
bit-vector form used throughout ("1100" reads coefficient of x^0 first,
i.e. 1 + x <-> 0b0011 <-> 3).

Multiplication and division go through exponent/logarithm tables built at
construction by repeated multiplication by x modulo the defining
polynomial.  The polynomial must be primitive: if the powers of x cycle
before visiting all 2^m - 1 nonzero elements, construction fails.
"""

from __future__ import annotations

from functools import lru_cache


class NotPrimitiveError(ValueError):
    """The defining polynomial does not make x a generator of F*."""


class DegreeMismatchError(ValueError):
    """The defining polynomial does not have the requested degree."""


class Field:
    """GF(2^m) defined by a bit-encoded primitive polynomial of degree m.

    All operations are pure and the tables are never mutated after
    construction, so a Field can be shared freely across threads.
    """

    __slots__ = ("m", "q", "primitive_poly", "exp", "log")

    def __init__(self, m: int, primitive_poly: int) -> None:
        if not 1 <= m <= 16:
            raise ValueError(f"extension degree m={m} out of range [1, 16]")
        if primitive_poly.bit_length() - 1 != m:
            raise DegreeMismatchError(
                f"polynomial 0x{primitive_poly:X} has degree "
                f"{primitive_poly.bit_length() - 1}, expected {m}")
        self.m = m
        self.q = 1 << m
        self.primitive_poly = primitive_poly

        exp = []
        log: list[int | None] = [None] * self.q
        x = 1
        for i in range(self.q - 1):
            if x == 0 or log[x] is not None:
                raise NotPrimitiveError(
                    f"x has multiplicative order {i} < {self.q - 1} modulo "
                    f"0x{primitive_poly:X}")
            exp.append(x)
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= primitive_poly
        self.exp = tuple(exp)
        self.log = tuple(log[1:])  # log[a - 1] is the exponent of a, a >= 1

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Characteristic-2 addition: bitwise XOR.  Doubles as subtraction."""
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a - 1] + self.log[b - 1]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.exp[(self.q - 1 - self.log[a - 1]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        if a == 0:
            return 0
        return self.exp[(self.log[a - 1] - self.log[b - 1]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp[(self.log[a - 1] * n) % (self.q - 1)]

    def alpha_pow(self, i: int) -> int:
        """i-th power of the generator (the class of x)."""
        return self.exp[i % (self.q - 1)]

    @property
    def alpha(self) -> int:
        """The generator element, the residue class of x."""
        return self.exp[1 % (self.q - 1)]

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no discrete logarithm")
        return self.log[a - 1]

    # -- iteration / identity -----------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Field)
                and self.m == other.m
                and self.primitive_poly == other.primitive_poly)

    def __hash__(self) -> int:
        return hash((self.m, self.primitive_poly))

    def __repr__(self) -> str:
        return f"Field(m={self.m}, primitive_poly=0x{self.primitive_poly:X})"


def element_bits(field: Field, a: int) -> str:
    """Bit-vector string of an element, coefficient of x^0 first."""
    return "".join(str((a >> i) & 1) for i in range(field.m))


def element_poly_str(field: Field, a: int) -> str:
    """Residue polynomial of an element, e.g. 3 -> '1 + x'."""
    if a == 0:
        return "0"
    terms = []
    for i in range(field.m):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms)


# Defining polynomial of the QR code field GF(256): x^8 + x^4 + x^3 + x^2 + 1.
QR_POLY = 0x11D


@lru_cache(maxsize=None)
def gf2() -> Field:
    return Field(1, 0b11)


@lru_cache(maxsize=None)
def gf16() -> Field:
    return Field(4, 0b10011)


@lru_cache(maxsize=None)
def gf256() -> Field:
    return Field(8, QR_POLY)
