import random

import pytest

from qrflip.gf import gf2, gf16, gf256
from qrflip.poly import (NEG_INF, FieldMismatchError, Poly, from_vector,
                         poly_gcd, poly_lcm, to_vector, x_pow_n_minus_1)


def p2(*coeffs):
    return Poly(gf2(), coeffs)


def test_normalization_and_degree():
    assert Poly(gf2(), (1, 1, 0, 0)).coeffs == (1, 1)
    assert Poly(gf2(), ()).degree == NEG_INF
    assert Poly(gf2(), (0, 0)).is_zero()
    assert p2(0, 0, 1).degree == 2


def test_add_identities():
    p = p2(1, 0, 1)
    assert p + Poly.zero(gf2()) == p
    assert p + p == Poly.zero(gf2())


def test_schoolbook_product_gf2():
    # (x + 1)(x^2 + x + 1) = x^3 + 1 over GF(2)
    assert p2(1, 1) * p2(1, 1, 1) == p2(1, 0, 0, 1)


def test_mul_by_zero_and_degree_law():
    rng = random.Random(7)
    f = gf256()
    zero = Poly.zero(f)
    for _ in range(50):
        a = Poly(f, [rng.randrange(256) for _ in range(rng.randrange(1, 9))])
        b = Poly(f, [rng.randrange(256) for _ in range(rng.randrange(1, 9))])
        assert zero * a == zero
        if not (a.is_zero() or b.is_zero()):
            assert (a * b).degree == a.degree + b.degree


def test_field_mismatch_rejected():
    with pytest.raises(FieldMismatchError):
        Poly(gf2(), (1,)) + Poly(gf16(), (1,))
    with pytest.raises(FieldMismatchError):
        Poly(gf2(), (1,)) * Poly(gf256(), (1,))


def test_divmod_trivial_and_by_zero():
    p = p2(1, 1, 0, 1)
    q, r = divmod(p, Poly.one(gf2()))
    assert (q, r) == (p, Poly.zero(gf2()))
    with pytest.raises(ZeroDivisionError):
        divmod(p, Poly.zero(gf2()))


def test_x7_minus_1_factorization():
    # x^7 - 1 = (x - 1)(x^3 + x^2 + 1)(x^3 + x + 1) over GF(2)
    x7 = x_pow_n_minus_1(gf2(), 7)
    assert (x7 % p2(1, 1, 0, 1)).is_zero()
    assert (x7 % p2(1, 0, 1, 1)).is_zero()
    assert p2(1, 1) * p2(1, 0, 1, 1) * p2(1, 1, 0, 1) == x7


def test_divmod_recompose_random_gf256():
    rng = random.Random(2024)
    f = gf256()
    for _ in range(1000):
        num = Poly(f, [rng.randrange(256) for _ in range(rng.randrange(0, 12))])
        den = Poly(f, [rng.randrange(256) for _ in range(rng.randrange(1, 6))])
        if den.is_zero():
            continue
        q, r = divmod(num, den)
        assert den * q + r == num
        assert r.is_zero() or r.degree < den.degree


def test_eval_zero_poly_and_horner_matches_sum():
    rng = random.Random(5)
    f = gf256()
    assert Poly.zero(f).eval(17) == 0
    for _ in range(100):
        p = Poly(f, [rng.randrange(256) for _ in range(rng.randrange(1, 10))])
        x = rng.randrange(256)
        direct = 0
        for i, c in enumerate(p.coeffs):
            direct ^= f.mul(c, f.pow(x, i))
        assert p.eval(x) == direct


def test_eval_roots_of_gf8_defining_poly():
    from qrflip.gf import Field

    f = Field(3, 0b1011)  # GF(8) from x^3 + x + 1
    p = Poly(f, (1, 1, 0, 1))  # x^3 + x + 1 viewed over GF(8)
    alpha = f.alpha
    assert p.eval(alpha) == 0
    assert p.eval(f.mul(alpha, alpha)) == 0
    assert p.eval(f.pow(alpha, 4)) == 0
    assert p.eval(f.pow(alpha, 3)) != 0


def test_shift():
    f = gf2()
    assert Poly.one(f).shift(32) == Poly.monomial(f, 32)
    assert Poly.zero(f).shift(5) == Poly.zero(f)
    assert p2(1, 1).shift(2) == p2(0, 0, 1, 1)


def test_cyclic_shift_is_mul_by_x_mod_xn_minus_1():
    # the coefficient-vector/polynomial correspondence: a one-step cyclic
    # shift of a length-n vector is multiplication by x mod x^n - 1
    rng = random.Random(99)
    f = gf16()
    n = 15
    modulus = x_pow_n_minus_1(f, n)
    for _ in range(200):
        vec = [rng.randrange(16) for _ in range(n)]
        shifted = [vec[-1]] + vec[:-1]
        p = from_vector(f, vec)
        q = (p * Poly.x(f)) % modulus
        assert to_vector(q, n) == tuple(shifted)


def test_scale_and_monic():
    f = gf256()
    p = Poly(f, (7, 0, 19))
    assert p.scale(1) == p
    assert p.scale(0).is_zero()
    assert p.monic().coeffs[-1] == 1
    assert p.monic().scale(19) == p


def test_gcd_lcm_gf2():
    a = p2(1, 1) * p2(1, 0, 1, 1)
    b = p2(1, 1) * p2(1, 1, 0, 1)
    assert poly_gcd(a, b) == p2(1, 1)
    assert poly_lcm(a, b) == p2(1, 1) * p2(1, 0, 1, 1) * p2(1, 1, 0, 1)


def test_repr():
    assert repr(p2(1, 1, 0, 1)) == "x^3 + x + 1"
    assert repr(Poly.zero(gf2())) == "0"
    assert repr(Poly(gf256(), (0, 7))) == "7*x"
