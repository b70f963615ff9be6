"""Polynomials over GF(2) packed into Python integers, and linear complexity.

Bit ``i`` of the backing integer is the coefficient of ``x**i``.  CPython
stores integers as arrays of machine words, so shifts and xors below run at
word granularity without any manual packing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class BitPoly:
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient vector must be non-negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BitPoly":
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "BitPoly":
        """Build from ``c_0, c_1, ...`` (each 0 or 1)."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c:
                bits |= 1 << i
        return cls(bits)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def exponents(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def reciprocal(self) -> "BitPoly":
        """x^deg * f(1/x)."""
        if self.bits == 0:
            return self
        return BitPoly(int(bin(self.bits)[:1:-1], 2))

    def __add__(self, other: "BitPoly") -> "BitPoly":
        return poly_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "BitPoly") -> "BitPoly":
        return poly_mul(self, other)

    def __divmod__(self, other: "BitPoly") -> Tuple["BitPoly", "BitPoly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: "BitPoly") -> "BitPoly":
        return poly_divrem(self, other)[0]

    def __mod__(self, other: "BitPoly") -> "BitPoly":
        return poly_divrem(self, other)[1]

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


ZERO = BitPoly(0)
ONE = BitPoly(1)


def poly_add(a: BitPoly, b: BitPoly) -> BitPoly:
    return BitPoly(a.bits ^ b.bits)


def _clmul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_mul(a: BitPoly, b: BitPoly) -> BitPoly:
    """Carryless product; shifts the denser operand once per set bit of the sparser."""
    return BitPoly(_clmul(a.bits, b.bits))


def poly_divrem(a: BitPoly, b: BitPoly) -> Tuple[BitPoly, BitPoly]:
    if b.bits == 0:
        raise ZeroDivisionError("polynomial division by zero")
    r, d = a.bits, b.bits
    db = d.bit_length()
    q = 0
    while r.bit_length() >= db:
        shift = r.bit_length() - db
        r ^= d << shift
        q |= 1 << shift
    return BitPoly(q), BitPoly(r)


def _gcd(a: int, b: int) -> int:
    while b:
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return a


def poly_gcd(a: BitPoly, b: BitPoly) -> BitPoly:
    if a.bits == 0 and b.bits == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return BitPoly(_gcd(a.bits, b.bits))


def x_pow_minus_one(n: int) -> BitPoly:
    return BitPoly((1 << n) | 1)


class LcMethod(enum.Enum):
    BM = "bm"
    GCD = "gcd"


@dataclass(frozen=True)
class LcResult:
    lc: int
    minimal_poly_degree: int
    method: LcMethod


def _bits_int(bits: Iterable[int]) -> Tuple[int, int]:
    value, n = 0, 0
    for i, b in enumerate(bits):
        if b:
            value |= 1 << i
        n = i + 1
    return value, n


def berlekamp_massey(bits: Iterable[int]) -> Tuple[int, BitPoly]:
    """Shortest LFSR for a finite bit sequence.

    Returns ``(L, C)`` where ``C(x) = 1 + c_1 x + ... + c_L x^L`` is the
    connection polynomial: ``s_n = c_1 s_{n-1} + ... + c_L s_{n-L}``.
    """
    seq = list(bits)
    c, b = 1, 1
    lc, m = 0, -1
    # window holds s_n, s_{n-1}, ..., s_0 at bits 0, 1, ..., n
    window = 0
    for n, s in enumerate(seq):
        window = (window << 1) | s
        if (c & window).bit_count() & 1:
            t = c
            c ^= b << (n - m)
            if 2 * lc <= n:
                lc, m, b = n + 1 - lc, n, t
    return lc, BitPoly(c)


def lc_berlekamp_massey(seq) -> LcResult:
    """Linear complexity of a periodic sequence from two periods of BM."""
    bits = list(seq)
    lc, _ = berlekamp_massey(bits + bits)
    return LcResult(lc, lc, LcMethod.BM)


def lc_gcd_method(seq) -> Tuple[LcResult, BitPoly]:
    """Linear complexity as ``T - deg gcd(x^T - 1, s(x))``.

    Also returns the minimal polynomial ``M`` normalised so that
    ``sum_i m_i s_{u+i} = 0`` for every ``u``.  That is the reciprocal of
    ``(x^T - 1)/gcd(x^T - 1, s(x))``; both have the same degree.
    """
    s, period = _bits_int(seq)
    if s == 0:
        return LcResult(0, 0, LcMethod.GCD), ONE
    modulus = x_pow_minus_one(period)
    g = BitPoly(_gcd(modulus.bits, s))
    quotient, rem = poly_divrem(modulus, g)
    assert rem.is_zero()
    minimal = quotient.reciprocal()
    lc = period - g.degree
    assert minimal.degree == lc
    return LcResult(lc, minimal.degree, LcMethod.GCD), minimal


def cyclotomic_factors(p: int) -> Tuple[BitPoly, BitPoly, BitPoly]:
    """x^(p^2) - 1 = (x + 1) * (1 + x + ... + x^(p-1)) * (1 + x^p + ... + x^((p-1)p))."""
    f1 = BitPoly(0b11)
    fp = BitPoly((1 << p) - 1)
    fp2 = BitPoly.from_exponents(k * p for k in range(p))
    return f1, fp, fp2


def root_spectrum(s: BitPoly, p: int) -> Tuple[int, int, int]:
    """Common roots of ``s`` and ``x^(p^2) - 1`` split by order 1, p, p^2."""
    if s.degree >= p * p:
        raise ValueError("generating polynomial must have degree < p^2")
    return tuple(poly_gcd(s, f).degree for f in cyclotomic_factors(p))
