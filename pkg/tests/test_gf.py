import pytest

from qrflip.gf import (DegreeMismatchError, Field, NotPrimitiveError,
                       element_bits, element_poly_str, gf2, gf16, gf256)

# The 15 nonzero elements of GF(16) under f(x) = 1 + x + x^4, as powers of
# the generator: bit-vector strings with the coefficient of x^0 first.
GF16_POWER_TABLE = [
    "1000",  # b^0  = 1
    "0100",  # b^1  = x
    "0010",  # b^2  = x^2
    "0001",  # b^3  = x^3
    "1100",  # b^4  = 1 + x
    "0110",  # b^5  = x + x^2
    "0011",  # b^6  = x^2 + x^3
    "1101",  # b^7  = 1 + x + x^3
    "1010",  # b^8  = 1 + x^2
    "0101",  # b^9  = x + x^3
    "1110",  # b^10 = 1 + x + x^2
    "0111",  # b^11 = x + x^2 + x^3
    "1111",  # b^12 = 1 + x + x^2 + x^3
    "1011",  # b^13 = 1 + x^2 + x^3
    "1001",  # b^14 = 1 + x^3
]


def test_gf16_power_table_regenerated():
    f = gf16()
    assert len(f.exp) == 15
    assert [element_bits(f, a) for a in f.exp] == GF16_POWER_TABLE


def test_gf16_distinct_nonzero_powers():
    f = gf16()
    assert len(set(f.exp)) == 15
    assert 0 not in f.exp
    assert f.exp[0] == 1


def test_exp_table_multiplication_rule():
    f = gf16()
    for i in range(15):
        for j in range(15):
            assert f.exp[(i + j) % 15] == f.mul(f.exp[i], f.exp[j])


def test_worked_product_1100_times_1010():
    # (1100)(1010) = b^4 b^8 = b^12 = (1111)
    f = gf16()
    a = int("1100"[::-1], 2)
    b = int("1010"[::-1], 2)
    assert f.mul(a, b) == int("1111"[::-1], 2)
    assert element_bits(f, f.mul(a, b)) == "1111"


def test_log_exp_round_trip_gf16():
    f = gf16()
    for a in f.nonzero():
        assert f.exp[f.log_of(a)] == a


def test_log_exp_round_trip_gf256():
    f = gf256()
    assert f.q == 256
    for a in f.nonzero():
        assert f.exp[f.log_of(a)] == a


def test_gf256_primitive_poly_is_the_qr_one():
    # x^8 + x^4 + x^3 + x^2 + 1
    assert gf256().primitive_poly == 0x11D


def test_not_primitive_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
    with pytest.raises(NotPrimitiveError):
        Field(4, 0b11111)


def test_reducible_rejected():
    with pytest.raises(NotPrimitiveError):
        Field(4, 0b11011)  # x^4 + x^3 + x + 1 = (x+1)^2 (x^2+x+1)


def test_degree_mismatch_rejected():
    with pytest.raises(DegreeMismatchError):
        Field(4, 0b1011)
    with pytest.raises(DegreeMismatchError):
        Field(3, 0b10011)


def test_add_is_xor_and_characteristic_2():
    f = gf16()
    for a in f.elements():
        assert f.add(0, a) == a
        assert f.add(a, a) == 0
    assert f.add(0b0011, 0b0110) == 0b0101
    assert f.sub(0b0011, 0b0110) == 0b0101


def test_mul_identities():
    f = gf256()
    for a in f.elements():
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0


def test_inverse_law_gf256():
    f = gf256()
    for a in f.nonzero():
        assert f.mul(f.inv(a), a) == 1
        assert f.div(1, a) == f.inv(a)


def test_division_by_zero():
    f = gf16()
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(3, 0)


def test_pow():
    f = gf16()
    for a in f.nonzero():
        acc = 1
        for n in range(6):
            assert f.pow(a, n) == acc
            acc = f.mul(acc, a)
        assert f.mul(f.pow(a, -1), a) == 1
    assert f.pow(0, 0) == 1
    assert f.pow(0, 3) == 0


# ---------------------------------------------------------------------------
# field axioms, exhaustive on GF(16)
# ---------------------------------------------------------------------------


def test_commutativity_exhaustive():
    f = gf16()
    for a in f.elements():
        for b in f.elements():
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)


def test_associativity_and_distributivity_exhaustive():
    f = gf16()
    for a in f.elements():
        for b in f.elements():
            for c in f.elements():
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert (f.mul(a, f.add(b, c))
                        == f.add(f.mul(a, b), f.mul(a, c)))


def test_gf2_is_a_field():
    f = gf2()
    assert f.q == 2
    assert f.mul(1, 1) == 1
    assert f.add(1, 1) == 0


def test_fields_shareable_and_comparable():
    assert gf16() is gf16()
    assert Field(4, 0b10011) == gf16()
    assert Field(8, 0x11D) != gf16()


def test_element_rendering():
    f = gf16()
    assert element_poly_str(f, 0) == "0"
    assert element_poly_str(f, 3) == "1 + x"
    assert element_poly_str(f, 0b1011) == "1 + x + x^3"
    assert element_bits(f, 3) == "1100"
