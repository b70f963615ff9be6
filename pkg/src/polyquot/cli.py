"""Command-line interface: ``polyquot <subcommand> ...``.

Exit status is 0 on success, 1 when a measured linear complexity falls
outside its predicted set, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import analysis, gf2poly
from .analysis import PredictionRefused, ScanResult
from .cyclotomy import build_partition, verify_facts
from .numtheory import QuotientSpec, poly_quotient
from .seqgen import Kind, generate

CSV_HEADER = ["p", "w", "class", "p_mod_8", "wieferich", "lc", "predicted",
              "branch", "in_set", "weight", "n0", "np", "nunits"]
SIGNED_MOD_8 = {1: "1", 3: "3", 5: "-3", 7: "-1"}


class InputError(ValueError):
    pass


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _fmt_bool(b: Optional[bool]) -> str:
    return "" if b is None else str(b).lower()


def _report_text(r: analysis.LcReport) -> str:
    d = r.to_dict()
    keys = ["p", "w", "exponent_class", "kind", "wieferich", "lc", "lc_bm", "lc_gcd",
            "minimal_poly_degree", "predicted", "case_label", "exact", "branch",
            "in_set", "weight", "spectrum", "note"]
    return "".join(f"{k}: {d[k]}\n" for k in keys if d[k] not in (None, ""))


def scan_csv(result: ScanResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in result.rows:
        spec = r.spectrum or ("", "", "")
        predicted = "|".join(map(str, sorted(r.prediction.admissible, reverse=True))) \
            if r.prediction else ""
        writer.writerow([r.p, r.w, r.exponent_class, r.p % 8, _fmt_bool(r.wieferich),
                         "" if r.lc is None else r.lc, predicted, r.branch,
                         _fmt_bool(r.in_set), "" if r.weight is None else r.weight, *spec])
    return buf.getvalue()


def scan_json(result: ScanResult) -> str:
    return _json({
        "rows": [r.to_dict() for r in result.rows],
        "branch_counts": [
            {"p_mod_8": k[0], "class": k[1], "branch": k[2], "count": v}
            for k, v in result.branch_counts.items()
        ],
    })


def scan_markdown(result: ScanResult) -> str:
    """One line per (p, class, attained value), grouped by prime."""
    groups: dict = {}
    for r in result.rows:
        key = (r.p, r.exponent_class, r.lc, r.branch)
        groups.setdefault(key, []).append(r.w)
    lines = ["| p | mod 8 | class | linear complexity | w |",
             "|---|---|---|---|---|"]
    for (p, cls, lc, branch), ws in groups.items():
        if lc is None:
            value = "refused (Wieferich)"
        else:
            value = f"{lc}={branch}" if branch else str(lc)
        lines.append(f"| {p} | {SIGNED_MOD_8[p % 8]} | {cls} | {value} | "
                     f"{','.join(map(str, ws))} |")
    lines += ["", "| mod 8 | class | branch | count |", "|---|---|---|---|"]
    for (r8, cls, branch), n in result.branch_counts.items():
        lines.append(f"| {SIGNED_MOD_8[r8]} | {cls} | {branch} | {n} |")
    return "\n".join(lines) + "\n"


def _spec(args) -> QuotientSpec:
    if args.w < 1:
        raise InputError(f"w must be >= 1, got {args.w}")
    return QuotientSpec.of(args.p, args.w)


def cmd_quotient(args) -> tuple:
    if args.u < 0:
        raise InputError("u must be >= 0")
    q = poly_quotient(_spec(args), args.u)
    out = _json({"p": args.p, "w": args.w, "u": args.u, "q": q}) \
        if args.format == "json" else f"{q}\n"
    return out, 0


def cmd_generate(args) -> tuple:
    seq = generate(_spec(args), Kind(args.kind))
    out = {"bits": seq.to_text, "hex": seq.to_hex, "json": seq.to_json}[args.format]()
    return out, 0


def cmd_lc(args) -> tuple:
    spec = _spec(args)
    seq = generate(spec, Kind(args.kind))
    result = {"p": args.p, "w": args.w, "kind": args.kind}
    if args.method in ("bm", "both"):
        result["lc_bm"] = gf2poly.lc_berlekamp_massey(seq).lc
    if args.method in ("gcd", "both"):
        res, _ = gf2poly.lc_gcd_method(seq)
        result["lc_gcd"] = res.lc
        result["minimal_poly_degree"] = res.minimal_poly_degree
    if args.method == "both" and result["lc_bm"] != result["lc_gcd"]:
        raise AssertionError("Berlekamp-Massey and gcd methods disagree")
    result["lc"] = result.get("lc_gcd", result.get("lc_bm"))
    result["spectrum"] = list(gf2poly.root_spectrum(seq.poly(), spec.p))
    if args.format == "json":
        return _json(result), 0
    return "".join(f"{k}: {v}\n" for k, v in result.items()), 0


def cmd_predict(args) -> tuple:
    pred = analysis.predict_lc(_spec(args))
    values = sorted(pred.admissible, reverse=True)
    if args.format == "json":
        return _json({"p": args.p, "w": args.w, "admissible": values,
                      "branches": {str(k): v for k, v in pred.branches.items()},
                      "case_label": pred.case_label, "exact": pred.exact}), 0
    return (" ".join(f"{v}={pred.branches[v]}" for v in values)
            + f"  [{pred.case_label}]\n"), 0


def cmd_verify(args) -> tuple:
    report = analysis.verify(_spec(args), force=args.force)
    out = _json(report.to_dict()) if args.format == "json" else _report_text(report)
    return out, 1 if report.in_set is False else 0


def cmd_scan(args) -> tuple:
    if args.max_p < 3:
        raise InputError("--max-p must be >= 3")
    result = analysis.scan(args.max_p, args.w, Kind(args.kind), jobs=args.jobs)
    render = {"csv": scan_csv, "json": scan_json, "md": scan_markdown}[args.out]
    return render(result), 1 if result.mismatches else 0


def cmd_wieferich(args) -> tuple:
    if not 2 <= args.limit <= 1 << 32:
        raise InputError("--limit must be in [2, 2**32]")
    primes = analysis.wieferich_scan(args.limit)
    if args.format == "json":
        return _json({"limit": args.limit, "primes": primes}), 0
    return " ".join(map(str, primes)) + "\n", 0


def cmd_partition(args) -> tuple:
    part = build_partition(_spec(args))
    dump = part.to_dict()
    report = verify_facts(part)
    dump["facts"] = report.results
    dump["facts_exhaustive"] = report.exhaustive
    return _json(dump), 0 if report.all_pass else 1


def cmd_spectrum(args) -> tuple:
    seq = generate(_spec(args), Kind(args.kind))
    n0, np_, nunits = gf2poly.root_spectrum(seq.poly(), args.p)
    if args.format == "json":
        return _json({"p": args.p, "w": args.w, "kind": args.kind,
                      "n0": n0, "np": np_, "nunits": nunits}), 0
    return f"{n0} {np_} {nunits}\n", 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyquot",
        description="Legendre polynomial-quotient sequences and their linear complexity.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")

    pw = argparse.ArgumentParser(add_help=False)
    pw.add_argument("p", type=int, help="odd prime")
    pw.add_argument("w", type=int, help="exponent w >= 1")

    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", choices=["f", "e"], default="f")

    p = sub.add_parser("quotient", parents=[common, fmt, pw], help="print q_{p,w}(u)")
    p.add_argument("u", type=int)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("generate", parents=[common, pw, kind], help="one period of a sequence")
    p.add_argument("--format", choices=["bits", "hex", "json"], default="bits")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("lc", parents=[common, fmt, pw, kind], help="linear complexity")
    p.add_argument("--method", choices=["bm", "gcd", "both"], default="both")
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("predict", parents=[common, fmt, pw], help="admissible values")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", parents=[common, fmt, pw], help="measure and check")
    p.add_argument("--force", action="store_true",
                   help="measure even when no theorem applies (e.g. Wieferich p)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="measure and tabulate over many primes")
    p.add_argument("--max-p", type=int, required=True, help="scan odd primes below this")
    p.add_argument("--w", choices=list(analysis.W_SELECTORS), required=True)
    p.add_argument("--kind", choices=["f", "e"], default="f")
    p.add_argument("--out", choices=["csv", "json", "md"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("wieferich", parents=[common, fmt], help="Wieferich primes below a limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_wieferich)

    p = sub.add_parser("partition", parents=[common, pw], help="JSON dump of the classes")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("spectrum", parents=[common, fmt, pw, kind], help="root spectrum")
    p.set_defaults(func=cmd_spectrum)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except (ValueError, PredictionRefused) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
