import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rserasure.field import (POLY_32, add, build_z_matrix, field_preset, format_poly,
                             inverse, is_primitive, make_field, mul, mul_matrix, mul_ref,
                             OpCounter, parse_poly, power, xor_cost_estimate)

from oracles import gf2_mod, log_mul, log_tables, order_of_x

GF4 = field_preset("gf4")
GF8 = field_preset("gf8")
GF32 = field_preset("gf32")

elements32 = st.integers(min_value=0, max_value=2**32 - 1)


# -- construction ----------------------------------------------------------

def test_gf32_pentanomial_has_31_q_rows():
    f = make_field(32, "[32,31,3,1,0]")
    assert f.poly_mask == POLY_32 == 0x18000000B
    assert len(f.q_rows) == 31
    assert f.q_matrix.shape == (31, 32)


def test_gf4_q_rows():
    # rows written as bit strings, bit 0 first: 1100, 0110, 0011
    f = make_field(4, 0b10011)
    assert f.q_rows == (0b0011, 0b0110, 0b1100)
    assert f.q_matrix.tolist() == [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]


@pytest.mark.parametrize("m, poly", [(4, 0b10011), (8, 0x11D), (9, 0x211), (16, 0x1100B),
                                     (32, POLY_32), (32, parse_poly("[32,25,15,7,0]"))])
def test_q_rows_match_polynomial_remainder(m, poly):
    f = make_field(m, poly)
    for i, row in enumerate(f.q_rows):
        assert row == gf2_mod(1 << (m + i), poly)


@pytest.mark.parametrize("m, poly", [(1, 0b11), (33, (1 << 33) | 1), (4, 0b1011), (4, 0b10010),
                                     (4, 0b110011)])
def test_make_field_rejects(m, poly):
    with pytest.raises(ValueError):
        make_field(m, poly)


def test_parse_poly_forms():
    assert parse_poly("0x18000000B") == parse_poly("[32,31,3,1,0]") == POLY_32
    assert parse_poly("19") == 0b10011
    assert format_poly(POLY_32) == "[32,31,3,1,0]"
    for bad in ("[4,,1]", "[4,1,1]", "x^4+x+1"):
        with pytest.raises(ValueError):
            parse_poly(bad)


# -- primitivity -------------------------------------------------------------

def test_is_primitive_examples():
    assert is_primitive(make_field(4, 0b10011)) is True
    assert is_primitive(make_field(4, 0b11111)) is False     # irreducible, order 5
    assert is_primitive(GF32) is None


def test_gf32_poly_primitive_when_forced():
    assert is_primitive(GF32, limit=32) is True


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
def test_is_primitive_matches_exhaustive_order(m):
    group = (1 << m) - 1
    for low in range(1, 1 << m, 2):
        poly = (1 << m) | low
        assert is_primitive(make_field(m, poly)) == (order_of_x(poly) == group), format_poly(poly)


# -- add / mul ---------------------------------------------------------------

def test_add():
    assert add(0x5, 0x5) == 0
    assert add(0xB, 0) == 0xB
    assert add(0xC, 0xA) == 0x6


def test_mul_ref_examples():
    assert mul_ref(0x2, 0x2, GF4) == 0x4
    assert mul_ref(0x8, 0x2, GF4) == 0x3
    for a in range(16):
        assert mul_ref(a, 1, GF4) == a


def test_mul_matrix_examples():
    assert mul_matrix(0x2, 0x9, GF4) == 0x1
    assert mul_matrix(0x8, 0x2, GF4) == 0x3
    assert mul_matrix(0, 0xDEADBEEF, GF32) == 0


def test_mul_rejects_out_of_range():
    with pytest.raises(ValueError):
        mul_ref(16, 1, GF4)
    with pytest.raises(ValueError):
        mul_matrix(1, 1 << 32, GF32)


@pytest.mark.parametrize("f", [GF4, GF8], ids=["gf4", "gf8"])
def test_all_multipliers_match_log_tables(f):
    exp, log = log_tables(f.m, f.poly_mask)
    q = f.order
    a = np.repeat(np.arange(q), q)
    b = np.tile(np.arange(q), q)
    fast = mul(a, b, f)
    for x, y, c in zip(a.tolist(), b.tolist(), fast.tolist()):
        want = log_mul(x, y, exp, log)
        assert mul_ref(x, y, f) == want
        assert mul_matrix(x, y, f) == want
        assert c == want


def test_matrix_matches_ref_all_small_fields():
    for m, poly in [(2, 0b111), (3, 0b1011), (5, 0b100101), (6, 0b1000011), (7, 0b10000011)]:
        f = make_field(m, poly)
        for a, b in itertools.product(range(f.order), repeat=2):
            assert mul_matrix(a, b, f) == mul_ref(a, b, f)


def test_matrix_matches_ref_gf32_sample():
    rng = random.Random(7)
    for _ in range(2000):
        a, b = rng.getrandbits(32), rng.getrandbits(32)
        assert mul_matrix(a, b, GF32) == mul_ref(a, b, GF32) == mul(a, b, GF32)


def test_mul_broadcasts_and_counts():
    c = OpCounter()
    a = np.arange(12, dtype=np.int64).reshape(3, 4) % 16
    out = mul(a, 0x3, GF4, c)
    assert out.shape == (3, 4)
    assert c.muls == 12
    assert out[1, 2] == mul_ref(6, 3, GF4)


# -- Z matrix ----------------------------------------------------------------

def test_z_matrix_zero_and_one():
    assert not build_z_matrix(0, GF4).entries.any()
    z1 = build_z_matrix(1, GF4).entries
    for j in range(4):
        assert z1[:, j].tolist() == [int(i == j) for i in range(4)]


def test_z_matrix_times_b():
    z = build_z_matrix(0x8, GF4)
    assert z.apply(0x2) == 0x3


def test_z_matrix_entries_follow_definition():
    # f_{i,0} = a_i; f_{i,j} = u[i-j] a_{i-j} + sum_t q_{j-1-t,i} a_{m-1-t}
    f = make_field(8, 0x11D)
    m = f.m
    bit = lambda v, i: (v >> i) & 1
    for a in (0x01, 0x80, 0xA7, 0xFF):
        z = build_z_matrix(a, f).entries
        for i in range(m):
            assert z[i, 0] == bit(a, i)
            for j in range(1, m):
                v = bit(a, i - j) if i >= j else 0
                for t in range(j):
                    v ^= bit(f.q_rows[j - 1 - t], i) & bit(a, m - 1 - t)
                assert z[i, j] == v


@settings(max_examples=200, deadline=None)
@given(elements32, elements32, elements32)
def test_z_matrix_linear(a, a2, b):
    za = build_z_matrix(a, GF32).entries
    zb = build_z_matrix(a2, GF32).entries
    assert np.array_equal(build_z_matrix(a ^ a2, GF32).entries, za ^ zb)
    assert build_z_matrix(a, GF32).apply(b) == mul_ref(a, b, GF32)


# -- inverse / pow -----------------------------------------------------------

def test_inverse_examples():
    assert inverse(1, GF4) == 1
    assert inverse(0x2, GF4) == 0x9
    with pytest.raises(ZeroDivisionError, match="zero has no inverse"):
        inverse(0, GF4)


@pytest.mark.parametrize("f", [GF4, GF8, GF32], ids=["gf4", "gf8", "gf32"])
def test_inverse_counts_2m_minus_3(f):
    c = OpCounter()
    a = np.arange(1, 101, dtype=np.int64) % (f.order - 1) + 1
    inv = inverse(a, f, c)
    assert (mul(a, inv, f) == 1).all()
    assert c.inversions == a.size
    assert c.muls == a.size * (2 * f.m - 3)


def test_inverse_exhaustive_gf8():
    for a in range(1, 256):
        b = inverse(a, GF8)
        assert mul_ref(a, b, GF8) == 1


def test_power():
    assert power(0x7, 0, GF4) == 1
    assert power(0x7, 1, GF4) == 0x7
    assert power(0x2, 15, GF4) == 1
    assert power(0x2, 4, GF4) == 0x3
    assert power(2, 2**32 - 1, GF32) == 1


# -- field axioms (hypothesis) -------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(elements32, elements32, elements32)
def test_axioms_gf32(a, b, c):
    m = lambda x, y: mul(x, y, GF32)
    assert m(a, b) == m(b, a)
    assert m(m(a, b), c) == m(a, m(b, c))
    assert m(a, b ^ c) == m(a, b) ^ m(a, c)
    assert m(a, 1) == a and m(a, 0) == 0
    if a:
        assert m(a, inverse(a, GF32)) == 1


# -- cost estimate -----------------------------------------------------------

def _oracle_terms(f):
    # coefficient of a_r b_j in output bit i is bit i of x^r * x^j mod P
    return [sum((mul_ref(1 << r, 1 << j, f) >> i) & 1 for r in range(f.m) for j in range(f.m))
            for i in range(f.m)]


def test_cost_gf4_trinomial():
    rep = xor_cost_estimate(GF4)
    assert list(rep.terms_per_bit) == _oracle_terms(GF4) == [4, 7, 6, 5]
    assert rep.xor_term_count == 18
    assert rep.depth_estimate == 3


@pytest.mark.parametrize("m, poly", [(8, 0x11D), (9, "[9,4,3,1,0]"), (12, "[12,6,4,1,0]")])
def test_cost_matches_bilinear_oracle(m, poly):
    f = make_field(m, poly)
    assert list(xor_cost_estimate(f).terms_per_bit) == _oracle_terms(f)


def test_cost_trinomial_below_pentanomial_gf9():
    tri = make_field(9, "[9,4,0]")
    penta = make_field(9, "[9,4,3,1,0]")
    assert is_primitive(tri) and is_primitive(penta)
    assert xor_cost_estimate(tri).xor_term_count == 114
    assert xor_cost_estimate(penta).xor_term_count == 195


def test_cost_deterministic():
    assert xor_cost_estimate(GF32) == xor_cost_estimate(make_field(32, POLY_32))
