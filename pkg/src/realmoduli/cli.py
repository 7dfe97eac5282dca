"""Command-line front end.

Subcommands::

    realmoduli report --g 2 --r 2 --d 1 --n 3
    realmoduli scan --g 2..3 --r 2..4 --n 1..4 [--d-policy coprime-min | --d D] --format json|csv [--jobs J]
    realmoduli construct grassmannian --k 2 --m 4
    realmoduli hodge --g 2 --r 2 --d 1 --spec t1|tt|xy [--cap C]

Polynomials are emitted as arrays of decimal strings indexed by degree, so
that arbitrarily large Betti numbers survive any JSON consumer.  The CSV
header is :data:`CSV_FIELDS`.

Exit codes: 0 on success, 2 on usage errors or inadmissible parameters,
1 when a computed polynomial fails an internal consistency check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import constructions
from .moduli import InvariantError, ModuliReport, hodge_biseries, hodge_t1, q_complex, report
from .series import BiSeries, InexactDivisionError, NotPolynomialError, UniSeries

__all__ = ["run", "main", "emit", "report_to_dict", "variety_to_dict", "parse_poly", "CSV_FIELDS"]

CSV_FIELDS = (
    "g",
    "r",
    "d",
    "n",
    "dim_complex",
    "hodge_expressive",
    "maximal",
    "chi_eq_sigma",
    "b0_real",
    "total_betti_complex",
    "total_betti_real",
    "fixed_det_total_complex",
    "fixed_det_total_real",
)


class UsageError(Exception):
    pass


def poly_strings(s: UniSeries) -> list:
    return [str(c) for c in s.trimmed()]


def parse_poly(values) -> list:
    """Inverse of the string encoding used for polynomial fields."""
    return [int(v) for v in values]


def report_to_dict(rep: ModuliReport) -> dict:
    return {
        "g": rep.g,
        "r": rep.r,
        "d": rep.d,
        "n": rep.n,
        "dim_complex": rep.dim_complex,
        "poincare_complex": poly_strings(rep.poincare_complex),
        "hodge_t1": poly_strings(rep.hodge_t1),
        "poincare_real": poly_strings(rep.poincare_real),
        "fixed_det": {
            "hodge_t1": poly_strings(rep.fixed_det_hodge_t1),
            "poincare_real": poly_strings(rep.fixed_det_real),
        },
        "verdicts": {
            "hodge_expressive": rep.hodge_expressive,
            "maximal": rep.maximal,
            "chi_eq_sigma": rep.chi_eq_sigma,
        },
        "b0_real": rep.b0_real,
        "total_betti_complex": str(rep.total_betti_complex),
        "total_betti_real": str(rep.total_betti_real),
    }


def variety_to_dict(v: constructions.VarietyData) -> dict:
    return {
        "label": v.label,
        "dim": v.dim,
        "hodge_t1": poly_strings(v.hodge_t1),
        "poincare_real": poly_strings(v.poincare_real),
        "torsion_free": v.torsion_free,
        "verdicts": {
            "hodge_expressive": v.hodge_expressive,
            "maximal": v.maximal,
            "chi_eq_sigma": v.chi_eq_sigma,
        },
        "total_betti_complex": str(v.total_betti_complex),
        "total_betti_real": str(v.total_betti_real),
    }


def _csv_row(rep: ModuliReport) -> list:
    return [
        rep.g, rep.r, rep.d, rep.n, rep.dim_complex,
        rep.hodge_expressive, rep.maximal, rep.chi_eq_sigma,
        rep.b0_real, rep.total_betti_complex, rep.total_betti_real,
        rep.fixed_det_total_complex, rep.fixed_det_total_real,
    ]


def emit(obj, fmt: str = "json") -> str:
    """Serialize a report, a variety, or a list of reports.

    CSV is only defined for reports: one row per cell, polynomials omitted.
    """
    items = obj if isinstance(obj, list) else [obj]
    if fmt == "json":
        dicts = [report_to_dict(x) if isinstance(x, ModuliReport) else variety_to_dict(x) for x in items]
        payload = dicts if isinstance(obj, list) else dicts[0]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for x in items:
            if not isinstance(x, ModuliReport):
                raise TypeError("CSV output is only available for moduli reports")
            writer.writerow(["true" if v is True else "false" if v is False else v for v in _csv_row(x)])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


# -- argument handling ------------------------------------------------------


def _int_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="realmoduli", description="Poincaré and Hodge polynomials of moduli of bundles on real curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rp = sub.add_parser("report", help="all polynomials and verdicts for one cell")
    rp.add_argument("--g", type=int, required=True)
    rp.add_argument("--r", type=int, required=True)
    rp.add_argument("--d", type=int, required=True)
    rp.add_argument("--n", type=int, required=True)
    rp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("scan", help="reports over a parameter grid")
    sp.add_argument("--g", type=_int_range, required=True)
    sp.add_argument("--r", type=_int_range, required=True)
    sp.add_argument("--n", type=_int_range, required=True)
    sp.add_argument("--d-policy", choices=("coprime-min",), default="coprime-min")
    sp.add_argument("--d", type=int, default=None, help="fixed degree; cells with gcd(r, d) > 1 are skipped")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--jobs", type=int, default=1)

    cp = sub.add_parser("construct", help="closed-form varieties")
    csub = cp.add_subparsers(dest="name", required=True, parser_class=_Parser)
    c = csub.add_parser("grassmannian")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c = csub.add_parser("projective-space")
    c.add_argument("--m", type=int, required=True)
    c = csub.add_parser("curve")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c = csub.add_parser("pic")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, default=0)
    c = csub.add_parser("sym-power")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c = csub.add_parser("harnack")
    c.add_argument("--k", type=int, required=True)
    c = csub.add_parser("gallery")
    c.add_argument("surface", choices=sorted(constructions.GALLERY))

    hp = sub.add_parser("hodge", help="Hodge series of M(r, d)")
    hp.add_argument("--g", type=int, required=True)
    hp.add_argument("--r", type=int, required=True)
    hp.add_argument("--d", type=int, required=True)
    hp.add_argument("--spec", choices=("t1", "tt", "xy"), default="t1")
    hp.add_argument("--cap", type=int, default=None)
    return p


def _check_cell(g: int, n: int, r: int, d: int) -> None:
    if g < 1:
        raise UsageError("g must satisfy g >= 1")
    if r < 1:
        raise UsageError("r must satisfy r >= 1")
    if not 1 <= n <= g + 1:
        raise UsageError(f"n must satisfy 1 <= n <= g+1 (got n={n}, g={g})")
    if gcd(r, d) != 1:
        raise UsageError(f"r and d must be coprime (gcd({r}, {d}) = {gcd(r, d)})")


def scan_cells(g_range, r_range, n_range, d=None) -> list:
    """Admissible ``(g, n, r, d)`` cells in emission order."""
    cells = []
    for g in g_range:
        for r in r_range:
            dd = 1 if d is None else d
            if g < 1 or r < 1 or gcd(r, dd) != 1:
                continue
            for n in n_range:
                if 1 <= n <= g + 1:
                    cells.append((g, n, r, dd))
    return cells


def _report_cell(cell) -> ModuliReport:
    g, n, r, d = cell
    return report(g, n, r, d)


def _construct(args) -> constructions.VarietyData:
    name = args.name
    try:
        if name == "grassmannian":
            return constructions.grassmannian(args.k, args.m)
        if name == "projective-space":
            return constructions.projective_space(args.m)
        if name == "curve":
            return constructions.curve(args.g, args.n)
        if name == "pic":
            return constructions.pic(args.g, args.n, args.d)
        if name == "sym-power":
            return constructions.sym_power_curve(args.g, args.n, args.k)
        if name == "harnack":
            return constructions.harnack_double_cover(args.k)
        return constructions.surface_gallery(args.surface)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _hodge(args) -> dict:
    g, r, d = args.g, args.r, args.d
    if g < 1 or r < 1:
        raise UsageError("g and r must be positive")
    if args.cap is None and gcd(r, d) != 1:
        raise UsageError("--cap is required when r and d are not coprime")
    if g == 1 and gcd(r, d) != 1:
        raise UsageError("genus 1 needs coprime r and d")
    out = {"g": g, "r": r, "d": d, "spec": args.spec}
    if args.spec == "t1":
        s = hodge_t1(g, r, d, args.cap)
        out.update(cap=s.cap, coefficients=[str(c) for c in s.coeffs])
    elif args.spec == "tt":
        s = q_complex(g, r, d, args.cap)
        out.update(cap=s.cap, coefficients=[str(c) for c in s.coeffs])
    else:
        b: BiSeries = hodge_biseries(g, r, d, args.cap)
        out.update(cap=b.cap, coefficients=[[str(c) for c in row] for row in b.coeffs])
    return out


def run(argv=None, stdout=None) -> int:
    """Execute one command; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "report":
            _check_cell(args.g, args.n, args.r, args.d)
            stdout.write(emit(report(args.g, args.n, args.r, args.d), args.format))
        elif args.command == "scan":
            if args.jobs < 1:
                raise UsageError("--jobs must be at least 1")
            cells = scan_cells(args.g, args.r, args.n, args.d)
            if args.jobs == 1:
                reps = [_report_cell(c) for c in cells]
            else:
                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    reps = list(pool.map(_report_cell, cells))
            stdout.write(emit(reps, args.format))
        elif args.command == "construct":
            stdout.write(emit(_construct(args), "json"))
        else:
            stdout.write(json.dumps(_hodge(args), indent=2) + "\n")
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (InvariantError, InexactDivisionError, NotPolynomialError) as exc:
        print(f"realmoduli: internal check failed: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
