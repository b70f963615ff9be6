"""Partition of the residues mod p^2 into the level sets of H_w.

Units u split into classes D_l = {u : H_w(u) = l}, and each D_l splits again
by the quadratic character of u mod p into Q_l and N_l.  The multiples of p
form the extra class P.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .gf2poly import BitPoly
from .numtheory import ExponentClass, QuotientSpec, h_w, legendre

EXHAUSTIVE_FACTS_MAX_P = 31
FACT_SAMPLE_SIZE = 8


class Unit(NamedTuple):
    level: int
    character: int


class Pmult(NamedTuple):
    k: int


@dataclass(frozen=True, eq=False)
class CyclotomicPartition:
    spec: QuotientSpec
    # level[u] = H_w(u) for units, -1 on multiples of p
    level: np.ndarray
    # character[u] = (u/p), 0 on multiples of p
    character: np.ndarray
    D: np.ndarray  # shape (p, p-1), rows sorted
    Q: np.ndarray  # shape (p, (p-1)/2)
    N: np.ndarray

    @property
    def p(self) -> int:
        return self.spec.modulus.p

    @property
    def P(self) -> list[int]:
        return [k * self.p for k in range(self.p)]

    def label(self, u: int) -> Union[Unit, Pmult]:
        u %= self.p * self.p
        if self.level[u] < 0:
            return Pmult(u // self.p)
        return Unit(int(self.level[u]), int(self.character[u]))

    def classes(self, which: str) -> np.ndarray:
        try:
            return {"D": self.D, "Q": self.Q, "N": self.N}[which]
        except KeyError:
            raise ValueError(f"unknown class family {which!r}") from None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "w": self.spec.w,
            "D": self.D.tolist(),
            "Q": self.Q.tolist(),
            "N": self.N.tolist(),
            "P": self.P,
        }


def build_partition(spec: QuotientSpec) -> CyclotomicPartition:
    if spec.exponent_class is ExponentClass.MULTIPLE_OF_P:
        raise ValueError("p divides w: H_w vanishes and there is no partition")
    p, p2 = spec.modulus.p, spec.modulus.p_squared
    level = np.full(p2, -1, dtype=np.int64)
    chars = [legendre(r, p) for r in range(p)]
    character = np.array([chars[u % p] for u in range(p2)], dtype=np.int64)
    for u in range(p2):
        if u % p:
            level[u] = h_w(spec, u)

    units = np.flatnonzero(level >= 0)
    D = np.empty((p, p - 1), dtype=np.int64)
    Q = np.empty((p, (p - 1) // 2), dtype=np.int64)
    N = np.empty_like(Q)
    for l in range(p):
        members = units[level[units] == l]
        if len(members) != p - 1:
            raise AssertionError(f"|D_{l}| = {len(members)}, expected {p - 1}")
        D[l] = members
        qs = members[character[members] == 1]
        ns = members[character[members] == -1]
        if len(qs) != len(ns):
            raise AssertionError(f"|Q_{l}| != |N_{l}|")
        Q[l], N[l] = qs, ns
    for arr in (level, character, D, Q, N):
        arr.setflags(write=False)
    return CyclotomicPartition(spec, level, character, D, Q, N)


def class_polynomial(part: CyclotomicPartition, which: str, l: int) -> BitPoly:
    """Characteristic polynomial sum of x^u over the class D_l, Q_l or N_l."""
    if not 0 <= l < part.p:
        raise IndexError(f"class index {l} outside [0, {part.p})")
    return BitPoly.from_exponents(int(u) for u in part.classes(which)[l])


def lambda_polynomial(part: CyclotomicPartition, shift: int) -> BitPoly:
    """Sum of D_{l+shift}(x) over the quadratic non-residues l mod p."""
    p = part.p
    if not 0 <= shift < p:
        raise IndexError(f"shift {shift} outside [0, {p})")
    exps = []
    for l in range(1, p):
        if legendre(l, p) == -1:
            exps.extend(int(u) for u in part.D[(l + shift) % p])
    return BitPoly.from_exponents(exps)


def _sample_rows(classes: np.ndarray, exhaustive: bool) -> np.ndarray:
    if exhaustive:
        return classes.reshape(-1)
    width = classes.shape[1]
    idx = np.unique(np.linspace(0, width - 1, min(FACT_SAMPLE_SIZE, width)).astype(int))
    return classes[:, idx].reshape(-1)


def _translates(part, multipliers, source, target, chunk=64) -> bool:
    """Check sorted(a * source[l]) == target[l + H(a)] for every a and l."""
    p, p2 = part.p, part.p * part.p
    rows = np.arange(p)
    for start in range(0, len(multipliers), chunk):
        a = multipliers[start:start + chunk]
        images = np.sort((a[:, None, None] * source[None, :, :]) % p2, axis=-1)
        shifts = (rows[None, :] + part.level[a][:, None]) % p
        if not np.array_equal(images, target[shifts]):
            return False
    return True


@dataclass(frozen=True)
class FactReport:
    results: dict
    exhaustive: bool

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())


def verify_facts(part: CyclotomicPartition) -> FactReport:
    """Check that multiplying by a unit shifts the class index by H_w(a),
    that residues keep Q and N while non-residues swap them, and that each
    D_l hits every nonzero residue mod p.

    Every multiplier is tried for p <= 31; above that a fixed sample of
    eight elements per class.
    """
    p = part.p
    exhaustive = p <= EXHAUSTIVE_FACTS_MAX_P
    a_d = _sample_rows(part.D, exhaustive)
    a_q = _sample_rows(part.Q, exhaustive)
    a_n = _sample_rows(part.N, exhaustive)
    full = set(range(1, p))
    results = {
        "d_shift": _translates(part, a_d, part.D, part.D),
        "q_by_residue": _translates(part, a_q, part.Q, part.Q),
        "n_by_residue": _translates(part, a_q, part.N, part.N),
        "q_by_nonresidue": _translates(part, a_n, part.Q, part.N),
        "n_by_nonresidue": _translates(part, a_n, part.N, part.Q),
        "d_covers_units_mod_p": all(set((row % p).tolist()) == full for row in part.D),
    }
    return FactReport(results, exhaustive)
