"""The binary sequences (f_u) and (e_u) over one period of length p^2."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .cyclotomy import CyclotomicPartition
from .gf2poly import BitPoly
from .numtheory import ExponentClass, QuotientSpec, legendre, poly_quotient


class Kind(enum.Enum):
    F = "f"
    E = "e"


@dataclass(frozen=True, eq=False)
class BinarySequence:
    bits: np.ndarray
    kind: Kind
    spec: QuotientSpec

    def __post_init__(self):
        if len(self.bits) != self.spec.modulus.p_squared:
            raise ValueError("sequence length must be p^2")
        self.bits.setflags(write=False)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    def poly(self) -> BitPoly:
        """Generating polynomial s_0 + s_1 x + ... + s_{T-1} x^{T-1}."""
        packed = np.packbits(self.bits, bitorder="little").tobytes()
        return BitPoly(int.from_bytes(packed, "little"))

    def to_text(self) -> str:
        return "".join("1" if b else "0" for b in self.bits.tolist()) + "\n"

    def to_hex(self) -> str:
        # u = 0 is the most significant bit; zero-padded on the right to a byte
        return np.packbits(self.bits, bitorder="big").tobytes().hex() + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "p": self.spec.p,
            "w": self.spec.w,
            "kind": self.kind.value,
            "bits": self.to_text().rstrip("\n"),
        }) + "\n"


def _quotients(spec: QuotientSpec) -> list[int]:
    return [poly_quotient(spec, u) for u in range(spec.modulus.p_squared)]


def generate_f(spec: QuotientSpec) -> BinarySequence:
    """f_u = 1 exactly when q_{p,w}(u) is a quadratic non-residue mod p."""
    p = spec.p
    nonresidue = [legendre(r, p) == -1 for r in range(p)]
    bits = np.array([nonresidue[q] for q in _quotients(spec)], dtype=np.uint8)
    return BinarySequence(bits, Kind.F, spec)


def generate_e(spec: QuotientSpec) -> BinarySequence:
    """e_u = 1 exactly when q_{p,w}(u) >= (p+1)/2."""
    half = (spec.p + 1) // 2
    bits = np.array([q >= half for q in _quotients(spec)], dtype=np.uint8)
    return BinarySequence(bits, Kind.E, spec)


def generate(spec: QuotientSpec, kind: Kind = Kind.F) -> BinarySequence:
    return generate_f(spec) if kind is Kind.F else generate_e(spec)


def generate_f_by_classes(part: CyclotomicPartition) -> BinarySequence:
    """Rebuild (f_u) from the class structure alone.

    For even w the ones sit on the D_l with l a non-residue.  For odd w the
    character of u^w is that of u, so the ones move to N_l (l a residue)
    and Q_l (l a non-residue).  When w = 1 the multiples kp with k a
    non-residue are ones as well.
    """
    spec = part.spec
    if spec.exponent_class is ExponentClass.MULTIPLE_OF_P:
        raise ValueError("p divides w: no class construction")
    p = part.p
    level_nonres = np.array([legendre(l, p) == -1 for l in range(p)])
    units = part.level >= 0
    lev_nr = level_nonres[np.where(units, part.level, 0)] & units
    if spec.w % 2 == 0:
        bits = lev_nr
    else:
        lev_res = ~level_nonres[np.where(units, part.level, 0)] & units & (part.level != 0)
        bits = (lev_res & (part.character == -1)) | (lev_nr & (part.character == 1))
    bits = bits.astype(np.uint8)
    if spec.exponent_class is ExponentClass.ONE:
        for k in range(1, p):
            if level_nonres[k]:
                bits[k * p] = 1
    return BinarySequence(bits, Kind.F, spec)
