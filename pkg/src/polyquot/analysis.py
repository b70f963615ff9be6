"""Predicted linear complexities, measurement, and the scan harness."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import gf2poly
from .numtheory import ExponentClass, QuotientSpec, is_prime
from .seqgen import Kind, generate


class PredictionRefused(ValueError):
    """The theorems make no statement for this (p, w)."""


@dataclass(frozen=True)
class LcPrediction:
    # admissible value -> branch name, e.g. {156: "p^2-p"}
    branches: Dict[int, str]
    case_label: str

    @property
    def admissible(self) -> frozenset:
        return frozenset(self.branches)

    @property
    def exact(self) -> bool:
        return len(self.branches) == 1


def predict_lc(spec: QuotientSpec) -> LcPrediction:
    p, cls = spec.p, spec.exponent_class
    if cls is ExponentClass.MULTIPLE_OF_P:
        return LcPrediction({0: "0"}, "p|w")
    if spec.modulus.wieferich:
        raise PredictionRefused(
            f"p={p} is a Wieferich prime (2^(p-1) = 1 mod p^2); no theorem applies")
    if cls is ExponentClass.LARGE:
        raise PredictionRefused(
            f"w={spec.w} >= p is unreduced; reduce to w1={spec.reduced_w1}, "
            f"c={spec.multiplier_c} and measure empirically")

    full, half = p * p - p, (p * p - p) // 2
    top = p * p - 1
    if cls is ExponentClass.EVEN:
        if p % 4 == 1:
            return LcPrediction({full: "p^2-p"}, "Thm1/p=1 mod 4")
        return LcPrediction({top: "p^2-1"}, "Thm1/p=3 mod 4")
    if cls is ExponentClass.ODD_AT_LEAST_3:
        r = p % 8
        if r == 1:
            return LcPrediction({full: "p^2-p", half: "(p^2-p)/2"}, "Thm2/p=1 mod 8")
        if r == 7:
            return LcPrediction(
                {top: "p^2-1", (p * p + p) // 2 - 1: "(p^2+p)/2-1"}, "Thm2/p=-1 mod 8")
        if r == 5:
            return LcPrediction({full: "p^2-p"}, "Thm2/p=-3 mod 8")
        return LcPrediction({top: "p^2-1"}, "Thm2/p=3 mod 8")
    # w == 1
    if p % 4 == 1:
        return LcPrediction({full: "p^2-p", half: "(p^2-p)/2"}, "Thm3/p=1 mod 4")
    return LcPrediction({full + 1: "p^2-p+1", half + 1: "(p^2-p)/2+1"}, "Thm3/p=3 mod 4")


@dataclass
class LcReport:
    p: int
    w: int
    exponent_class: str
    kind: str
    wieferich: bool
    prediction: Optional[LcPrediction]
    lc_bm: Optional[int]
    lc_gcd: Optional[int]
    spectrum: Optional[Tuple[int, int, int]]
    weight: Optional[int]
    note: str = ""
    minimal_poly_degree: Optional[int] = None

    @property
    def lc(self) -> Optional[int]:
        return self.lc_gcd if self.lc_gcd is not None else self.lc_bm

    @property
    def in_set(self) -> Optional[bool]:
        if self.prediction is None or self.lc is None:
            return None
        return self.lc in self.prediction.admissible

    @property
    def branch(self) -> str:
        if self.prediction is None or self.lc is None:
            return ""
        return self.prediction.branches.get(self.lc, "MISMATCH")

    def to_dict(self) -> dict:
        d = asdict(self)
        pred = d.pop("prediction")
        d["predicted"] = sorted(self.prediction.admissible, reverse=True) if pred else None
        d["case_label"] = self.prediction.case_label if pred else None
        d["exact"] = self.prediction.exact if pred else None
        d["spectrum"] = list(self.spectrum) if self.spectrum else None
        d["lc"] = self.lc
        d["in_set"] = self.in_set
        d["branch"] = self.branch
        return d


def measure_lc(spec: QuotientSpec, kind: Kind = Kind.F, method: str = "both") -> LcReport:
    """Generate the sequence and measure its linear complexity.

    ``method`` is "bm", "gcd" or "both"; with "both" a disagreement raises.
    A prediction is attached for kind F whenever the theorems cover (p, w).
    """
    seq = generate(spec, kind)
    lc_bm = lc_gcd = mdeg = None
    if method in ("bm", "both"):
        lc_bm = gf2poly.lc_berlekamp_massey(seq).lc
    if method in ("gcd", "both"):
        res, _ = gf2poly.lc_gcd_method(seq)
        lc_gcd, mdeg = res.lc, res.minimal_poly_degree
    if lc_bm is not None and lc_gcd is not None and lc_bm != lc_gcd:
        raise AssertionError(f"BM gives {lc_bm}, gcd gives {lc_gcd} at p={spec.p}, w={spec.w}")

    prediction, note = None, ""
    if kind is Kind.F:
        try:
            prediction = predict_lc(spec)
        except PredictionRefused as exc:
            note = str(exc)
    else:
        note = "empirical only: no prediction for (e_u)"
    return LcReport(
        p=spec.p,
        w=spec.w,
        exponent_class=spec.exponent_class.value,
        kind=kind.value,
        wieferich=spec.modulus.wieferich,
        prediction=prediction,
        lc_bm=lc_bm,
        lc_gcd=lc_gcd,
        spectrum=gf2poly.root_spectrum(seq.poly(), spec.p),
        weight=seq.weight,
        note=note,
        minimal_poly_degree=mdeg if mdeg is not None else lc_bm,
    )


def verify(spec: QuotientSpec, force: bool = False) -> LcReport:
    """Measure (f_u) and check membership in the predicted set.

    Raises PredictionRefused when no theorem applies, unless ``force`` is set,
    in which case the report carries no prediction.
    """
    if not force:
        predict_lc(spec)
    return measure_lc(spec, Kind.F)


W_SELECTORS = ("even", "odd", "one", "all")


def select_w(p: int, selector: str) -> List[int]:
    if selector == "even":
        return list(range(2, p, 2))
    if selector == "odd":
        return list(range(3, p, 2))
    if selector == "one":
        return [1]
    if selector == "all":
        return list(range(1, p))
    raise ValueError(f"unknown w selector {selector!r}")


def _scan_job(args) -> LcReport:
    p, w, kind = args
    return measure_lc(QuotientSpec.of(p, w), Kind(kind))


def _refused_row(spec: QuotientSpec, kind: Kind) -> LcReport:
    return LcReport(
        p=spec.p, w=spec.w, exponent_class=spec.exponent_class.value, kind=kind.value,
        wieferich=True, prediction=None, lc_bm=None, lc_gcd=None, spectrum=None,
        weight=None, note="refused: Wieferich prime")


@dataclass
class ScanResult:
    rows: List[LcReport]
    # (p mod 8, exponent class, branch) -> count
    branch_counts: Dict[Tuple[int, str, str], int] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[LcReport]:
        return [r for r in self.rows if r.in_set is False]

    def values_by_p(self) -> Dict[int, Counter]:
        out: Dict[int, Counter] = {}
        for r in self.rows:
            if r.lc is not None:
                out.setdefault(r.p, Counter())[r.lc] += 1
        return out


def odd_primes_below(limit: int) -> List[int]:
    return [n for n in range(3, limit, 2) if is_prime(n)]


def scan(p_max: int, w_selector: str = "all", kind: Kind = Kind.F,
         jobs: int = 1) -> ScanResult:
    """Measure every odd prime p < p_max and every selected w.

    Rows are sorted by (p, w) whatever the worker count.  Wieferich primes
    get an annotated row without measurement.
    """
    tasks, rows = [], []
    for p in odd_primes_below(p_max):
        for w in select_w(p, w_selector):
            spec = QuotientSpec.of(p, w)
            if spec.modulus.wieferich:
                rows.append(_refused_row(spec, kind))
            else:
                tasks.append((p, w, kind.value))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows.extend(pool.map(_scan_job, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        rows.extend(map(_scan_job, tasks))
    rows.sort(key=lambda r: (r.p, r.w))
    counts = Counter((r.p % 8, r.exponent_class, r.branch or "empirical")
                     for r in rows if r.lc is not None)
    return ScanResult(rows, dict(sorted(counts.items())))


def _primes_in(lo: int, hi: int, base: List[int]) -> np.ndarray:
    seg = np.ones(hi - lo, dtype=bool)
    for q in base:
        if q * q >= hi:
            break
        start = max(q * q, (lo + q - 1) // q * q)
        seg[start - lo::q] = False
    if lo < 2:
        seg[:2 - lo] = False
    return np.flatnonzero(seg) + lo


def wieferich_scan(limit: int, segment: int = 1 << 22) -> List[int]:
    """All primes p < limit with 2^(p-1) = 1 mod p^2 (segmented sieve)."""
    if limit > 1 << 32:
        raise ValueError("limit above 2**32 is out of scope")
    base = [2] + odd_primes_below(math.isqrt(limit) + 2)
    found = []
    for lo in range(3, limit, segment):
        hi = min(limit, lo + segment)
        for p in _primes_in(lo, hi, base).tolist():
            if p % 2 and pow(2, p - 1, p * p) == 1:
                found.append(p)
    return found
