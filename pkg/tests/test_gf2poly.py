import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyquot.gf2poly import (
    ONE,
    ZERO,
    BitPoly,
    LcMethod,
    berlekamp_massey,
    cyclotomic_factors,
    lc_berlekamp_massey,
    lc_gcd_method,
    poly_add,
    poly_divrem,
    poly_gcd,
    poly_mul,
    root_spectrum,
)


def P(*exps):
    return BitPoly.from_exponents(exps)


def np_mul(a: BitPoly, b: BitPoly) -> BitPoly:
    """Oracle: integer convolution of coefficient vectors, then mod 2."""
    if a.is_zero() or b.is_zero():
        return ZERO
    ca = np.array([(a.bits >> i) & 1 for i in range(a.degree + 1)])
    cb = np.array([(b.bits >> i) & 1 for i in range(b.degree + 1)])
    return BitPoly.from_coefficients(np.convolve(ca, cb) % 2)


def brute_lc(period):
    """Oracle: try every connection polynomial of growing length."""
    T = len(period)
    s = period * 3
    for L in range(T + 1):
        for coeffs in itertools.product((0, 1), repeat=L):
            if all(s[n] == sum(c * s[n - i - 1] for i, c in enumerate(coeffs)) % 2
                   for n in range(L, 3 * T)):
                return L
    raise AssertionError("unreachable: L = T always works")


def annihilates(m: BitPoly, bits):
    ext = list(bits) * 2
    exps = m.exponents()
    return all(sum(ext[u + i] for i in exps) % 2 == 0 for u in range(len(bits)))


polys = st.integers(0, 1 << 200).map(BitPoly)
nonzero = st.integers(1, 1 << 120).map(BitPoly)


def test_add_examples():
    assert P(1, 0) + P(1, 0) == ZERO
    assert poly_add(P(2, 0), P(1)) == P(2, 1, 0)
    a = P(7, 3, 0)
    assert a + ZERO == a


def test_mul_examples():
    assert P(1, 0) * P(1, 0) == P(2, 0)
    assert poly_mul(P(1, 0), P(2, 1, 0)) == P(3, 0)
    a = P(9, 4, 1)
    assert a * ONE == a


def test_divrem_examples():
    assert poly_divrem(P(3, 0), P(1, 0)) == (P(2, 1, 0), ZERO)
    assert poly_divrem(P(2, 0), P(2, 0)) == (ONE, ZERO)
    assert poly_divrem(P(1), P(2, 0)) == (ZERO, P(1))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(P(1), ZERO)


def test_gcd_examples():
    assert poly_gcd(P(4, 0), P(3, 2, 1, 0)) == P(3, 2, 1, 0)
    a = P(5, 2)
    assert poly_gcd(a, ZERO) == a
    assert poly_gcd(P(2, 1), P(1)) == P(1)
    with pytest.raises(ValueError):
        poly_gcd(ZERO, ZERO)


def test_degree_and_str():
    assert ZERO.degree == -1
    assert P(0).degree == 0
    assert str(P(3, 1, 0)) == "x^3 + x + 1"
    assert str(ZERO) == "0"
    assert P(5, 1).reciprocal() == P(4, 0)


@settings(max_examples=200)
@given(polys, polys)
def test_mul_matches_convolution(a, b):
    assert poly_mul(a, b) == np_mul(a, b)


@settings(max_examples=200)
@given(polys, polys, polys)
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@settings(max_examples=200)
@given(polys, nonzero)
def test_divrem_reconstructs(a, b):
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=200)
@given(nonzero, nonzero, nonzero)
def test_gcd_divides_both(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert poly_divrem(a * c, g)[1] == ZERO
    assert poly_divrem(b * c, g)[1] == ZERO
    assert poly_divrem(g, c)[1] == ZERO


def test_lc_trivial_sequences():
    assert lc_berlekamp_massey([0] * 9).lc == 0
    assert lc_berlekamp_massey([1] * 9).lc == 1
    res, m = lc_gcd_method([0] * 9)
    assert (res.lc, m) == (0, ONE)
    res, m = lc_gcd_method([1, 1, 1, 1])
    assert res.lc == 1 and res.method is LcMethod.GCD
    assert m == P(1, 0)


def test_single_impulse_has_full_lc():
    T = 25
    bits = [1] + [0] * (T - 1)
    assert lc_gcd_method(bits)[0].lc == T
    assert lc_berlekamp_massey(bits).lc == T


def test_minimal_polynomial_convention():
    # m-sequence of period 7; the annihilating polynomial is x^3 + x^2 + 1,
    # while (x^7 - 1)/gcd(x^7 - 1, s(x)) is its reciprocal x^3 + x + 1
    bits = [1, 1, 1, 0, 1, 0, 0]
    res, m = lc_gcd_method(bits)
    assert res.lc == 3
    assert m == P(3, 2, 0)
    assert annihilates(m, bits)
    assert not annihilates(P(3, 1, 0), bits)


@pytest.mark.parametrize("T", range(1, 9))
def test_lc_against_brute_force_all_sequences(T):
    for word in range(1 << T):
        bits = [(word >> i) & 1 for i in range(T)]
        expected = brute_lc(bits)
        assert lc_gcd_method(bits)[0].lc == expected
        assert lc_berlekamp_massey(bits).lc == expected


def test_bm_vs_gcd_on_random_sequences():
    rng = random.Random(20240417)
    for _ in range(200):
        T = rng.randint(1, 2048)
        bits = [rng.getrandbits(1) for _ in range(T)]
        res, m = lc_gcd_method(bits)
        assert lc_berlekamp_massey(bits).lc == res.lc == m.degree
        if T <= 256:
            assert annihilates(m, bits)


def test_berlekamp_massey_connection_polynomial_generates_sequence():
    rng = random.Random(7)
    bits = [rng.getrandbits(1) for _ in range(300)]
    L, c = berlekamp_massey(bits)
    taps = [e for e in c.exponents() if e]
    for n in range(L, len(bits)):
        assert bits[n] == sum(bits[n - i] for i in taps) % 2


def test_cyclotomic_factors_p3():
    assert cyclotomic_factors(3) == (P(1, 0), P(2, 1, 0), P(6, 3, 0))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_cyclotomic_factors_product(p):
    f1, fp, fp2 = cyclotomic_factors(p)
    assert f1 * fp * fp2 == P(p * p, 0)
    assert (f1.degree, fp.degree, fp2.degree) == (1, p - 1, p * p - p)


def test_root_spectrum_all_ones():
    p = 7
    s = BitPoly((1 << (p * p)) - 1)
    assert root_spectrum(s, p) == (0, p - 1, p * p - p)


def test_root_spectrum_rejects_high_degree():
    with pytest.raises(ValueError):
        root_spectrum(P(25), 5)


@settings(max_examples=100)
@given(st.sampled_from([3, 5, 7, 11]), st.data())
def test_spectrum_sums_to_period_minus_lc(p, data):
    T = p * p
    bits = data.draw(st.lists(st.integers(0, 1), min_size=T, max_size=T))
    n0, np_, nu = root_spectrum(BitPoly.from_coefficients(bits), p)
    assert n0 + np_ + nu + lc_gcd_method(bits)[0].lc == T
