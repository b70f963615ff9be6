"""Modular arithmetic, Fermat and polynomial quotients, and the H_w map.

Every modulus handled here is below 2**40, so Python's native integers give
exact results without any special care; the bounds are still validated so
callers get the same contract a fixed-width implementation would offer.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Optional, Tuple

MAX_PRIME = 1 << 20
MAX_MODULUS = 1 << 40

# Deterministic Miller-Rabin witnesses; exact for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return ``base**exponent mod modulus`` for ``2 <= modulus < 2**40``."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if not 2 <= modulus < MAX_MODULUS:
        raise ValueError(f"modulus {modulus} outside [2, 2**40)")
    return pow(base, exponent, modulus)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion, returned in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_wieferich(p: int) -> bool:
    return pow(2, p - 1, p * p) == 1


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` in the unit group mod ``n`` (``n = p`` or ``p**2``)."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    # the unit group mod p or p^2 has order p^k - p^(k-1)
    root = math.isqrt(n)
    group = n - root if root * root == n else n - 1
    order = group
    for q in _prime_factors(group):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def find_primitive_root_mod_p2(p: int) -> int:
    """Smallest primitive root mod p, lifted to p + g when it fails mod p**2."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            break
    else:  # unreachable for odd primes
        raise ValueError(f"no primitive root found for {p}")
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class OddPrimeModulus:
    p: int
    p_squared: int
    primitive_root: int
    wieferich: bool

    @classmethod
    def of(cls, p: int) -> "OddPrimeModulus":
        return _modulus(p)


@functools.lru_cache(maxsize=None)
def _modulus(p: int) -> OddPrimeModulus:
    if not 3 <= p < MAX_PRIME:
        raise ValueError(f"p={p} outside the supported range [3, 2**20)")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    return OddPrimeModulus(p, p * p, find_primitive_root_mod_p2(p), is_wieferich(p))


class ExponentClass(enum.Enum):
    MULTIPLE_OF_P = "multiple_of_p"
    ONE = "one"
    EVEN = "even"
    ODD_AT_LEAST_3 = "odd"
    LARGE = "large"


def reduce_exponent(
    m: OddPrimeModulus, w: int
) -> Tuple[ExponentClass, Optional[int], Optional[int]]:
    """Classify ``w`` and reduce it below p.

    Writing ``w = w1 + w2*(p-1)`` with ``1 <= w1 <= p-1``, the quotient of
    exponent ``w`` is ``c * q_{p,w1}`` on units with ``c = (w1 - w2)/w1 mod p``.
    Returns ``(exponent_class, w1, c)``; ``w1`` and ``c`` are None if p | w.
    """
    if w < 1:
        raise ValueError(f"w must be >= 1, got {w}")
    p = m.p
    if w % p == 0:
        return ExponentClass.MULTIPLE_OF_P, None, None
    w1 = (w - 1) % (p - 1) + 1
    w2 = (w - w1) // (p - 1)
    c = (w1 - w2) * pow(w1, -1, p) % p
    if w == 1:
        cls = ExponentClass.ONE
    elif w >= p:
        cls = ExponentClass.LARGE
    elif w % 2 == 0:
        cls = ExponentClass.EVEN
    else:
        cls = ExponentClass.ODD_AT_LEAST_3
    return cls, w1, c


@dataclass(frozen=True)
class QuotientSpec:
    modulus: OddPrimeModulus
    w: int
    exponent_class: ExponentClass
    reduced_w1: Optional[int]
    multiplier_c: Optional[int]

    @classmethod
    def of(cls, p: int, w: int) -> "QuotientSpec":
        m = OddPrimeModulus.of(p)
        if w >= MAX_PRIME:
            raise ValueError(f"w={w} exceeds 2**20")
        return cls(m, w, *reduce_exponent(m, w))

    @property
    def p(self) -> int:
        return self.modulus.p


def fermat_quotient(m: OddPrimeModulus, u: int) -> int:
    p, p2 = m.p, m.p_squared
    if u % p == 0:
        return 0
    return (pow(u, p - 1, p2) - 1) // p


def poly_quotient(spec: QuotientSpec, u: int) -> int:
    """q_{p,w}(u) = (u^w - u^(wp))/p mod p, straight from the definition.

    The multiples-of-p cases fall out of the same formula: u^w and u^(wp)
    vanish mod p**2 for w >= 2, and for w = 1 the difference is u mod p**2.
    """
    p, p2 = spec.modulus.p, spec.modulus.p_squared
    diff = pow(u, spec.w, p2) - pow(u, spec.w * p, p2)
    quot, rem = divmod(diff, p)
    assert rem == 0, f"u^w - u^(wp) not divisible by p at u={u}"
    return quot % p


def h_w(spec: QuotientSpec, u: int) -> int:
    """The homomorphism H_w(u) = -w * q_p(u) mod p on units mod p**2."""
    p = spec.modulus.p
    if u % p == 0:
        raise ValueError(f"H_w is defined on units only; p divides {u}")
    return -spec.w * fermat_quotient(spec.modulus, u) % p
