"""Binary sequences from Legendre symbols of polynomial quotients mod p^2."""

from .numtheory import (
    ExponentClass,
    OddPrimeModulus,
    QuotientSpec,
    fermat_quotient,
    h_w,
    legendre,
    poly_quotient,
)
from .seqgen import BinarySequence, Kind, generate_e, generate_f
from .gf2poly import BitPoly, lc_berlekamp_massey, lc_gcd_method
from .analysis import measure_lc, predict_lc, scan, verify

__all__ = [
    "BinarySequence", "BitPoly", "ExponentClass", "Kind", "OddPrimeModulus",
    "QuotientSpec", "fermat_quotient", "generate_e", "generate_f", "h_w",
    "lc_berlekamp_massey", "lc_gcd_method", "legendre", "measure_lc",
    "poly_quotient", "predict_lc", "scan", "verify",
]
