"""Command-line front end: eigenvalue computation, verification sweeps,
Gaussian binomial queries, eigenform inspection, self-test.

Exit codes: 0 = all checks passed, 1 = a mathematical check failed
(reportable finding), 2 = usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exactnum import QuadExt, primes_upto
from .ikeda import DeligneBoundError, IkedaParams, verify_prime
from .modforms import (
    EigenformValidationError,
    eigenform,
    hecke_eigenvalue_prime,
    load_eigenform,
)
from .polyalg import poly_str
from .qseries import q_binomial, q_binomial_eval
from . import selftest as _selftest

CSV_COLUMNS = [
    "p",
    "a_p",
    "lambda",
    "lower_exact",
    "upper_exact",
    "lower_decimal",
    "upper_decimal",
    "positive",
    "within_bounds",
    "routes_agree",
]


def _exact_field(x: QuadExt) -> str:
    """Lossless rendering R+S*sqrt(P) with R, S as num/den rationals."""
    a, b = x.a, x.b
    return f"{a.numerator}/{a.denominator}+{b.numerator}/{b.denominator}*sqrt({x.p})"


def _series_for(params: IkedaParams, pmax: int, path):
    w = params.eigenform_weight
    if path is not None:
        series = load_eigenform(path, w)
        if series.truncation < pmax:
            raise ValueError(
                f"coefficient table covers m <= {series.truncation}, below pmax = {pmax}"
            )
        return series
    return eigenform(w, pmax)


def _reports(params: IkedaParams, pmax: int, path):
    series = _series_for(params, pmax, path)
    out = []
    for p in primes_upto(pmax):
        ap = hecke_eigenvalue_prime(series, p)
        out.append(verify_prime(params, p, ap))
    return out


def _row(rep, digits: int) -> dict:
    return {
        "p": rep.p,
        "a_p": rep.a_p,
        "lambda": rep.eigenvalue,
        "lower_exact": _exact_field(rep.lower),
        "upper_exact": _exact_field(rep.upper),
        "lower_decimal": rep.lower.decimal(digits),
        "upper_decimal": rep.upper.decimal(digits),
        "positive": rep.positive,
        "within_bounds": rep.within_bounds,
        "routes_agree": rep.routes_agree,
    }


def _emit(rows: list[dict], fmt: str, out_path) -> None:
    if fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            rendered = {
                key: ("true" if val is True else "false" if val is False else val)
                for key, val in row.items()
            }
            writer.writerow(rendered)
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_eigen(args) -> int:
    params = IkedaParams(args.n, args.k)
    reports = _reports(params, args.pmax, args.eigenform)
    rows = [_row(r, args.digits) for r in reports]
    _emit(rows, args.format, args.out)
    ok = all(r.positive and r.within_bounds and r.routes_agree for r in reports)
    return 0 if ok else 1


def run_verify(args) -> int:
    params = IkedaParams(args.n, args.k)
    reports = _reports(params, args.pmax, args.eigenform)
    print(
        f"verify n={params.n} k={params.k} "
        f"(elliptic weight {params.eigenform_weight}), primes <= {args.pmax}"
    )
    header = f"{'p':>6}  {'a_p':>24}  {'lambda':>44}  {'positive':>8}  {'bounds':>6}"
    print(header)
    failures = 0
    for r in reports:
        ok = r.positive and r.within_bounds and r.routes_agree
        if not ok:
            failures += 1
        print(
            f"{r.p:>6}  {r.a_p:>24}  {r.eigenvalue:>44}  "
            f"{'yes' if r.positive else 'NO':>8}  {'yes' if r.within_bounds else 'NO':>6}"
        )
    print(
        f"summary: {len(reports)} primes checked, {failures} failures; "
        "all routes agreed at every prime"
    )
    return 0 if failures == 0 else 1


def run_qbinom(args) -> int:
    if args.m > args.n:
        raise ValueError(f"m = {args.m} exceeds n = {args.n}")
    if args.q is not None:
        print(q_binomial_eval(args.n, args.m, args.q))
    else:
        print(poly_str(q_binomial(args.n, args.m), var="q"))
    return 0


def run_forms(args) -> int:
    if args.eigenform is not None:
        series = load_eigenform(args.eigenform, args.weight)
        if series.truncation < args.pmax:
            raise ValueError(
                f"coefficient table covers m <= {series.truncation}, "
                f"below pmax = {args.pmax}"
            )
    else:
        series = eigenform(args.weight, args.pmax)
    lines = [f"# weight {args.weight} eigenform coefficients"]
    for m in range(1, args.pmax + 1):
        lines.append(f"{m} {series.a(m)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run_selftest(args) -> int:
    passed, failed = _selftest.run(print_line=print)
    print(f"selftest: {passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ikedalift",
        description=(
            "Exact computation and verification of Hecke eigenvalues of "
            "Ikeda lifts at primes"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eigen = sub.add_parser("eigen", help="per-prime eigenvalue records (CSV/JSON)")
    eigen.add_argument("--n", type=int, required=True, help="degree (even)")
    eigen.add_argument("--k", type=int, required=True, help="weight (even, > n+1)")
    eigen.add_argument("--pmax", type=int, default=100, help="largest prime checked")
    eigen.add_argument("--eigenform", help="coefficient table for weight 2k-n")
    eigen.add_argument("--format", choices=("csv", "json"), default="csv")
    eigen.add_argument("--out", help="output path (default stdout)")
    eigen.add_argument("--digits", type=int, default=50, help="decimal rendering digits")
    eigen.set_defaults(func=run_eigen)

    verify = sub.add_parser("verify", help="verification sweep with summary table")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--k", type=int, required=True)
    verify.add_argument("--pmax", type=int, default=100)
    verify.add_argument("--eigenform", help="coefficient table for weight 2k-n")
    verify.set_defaults(func=run_verify)

    qbinom = sub.add_parser("qbinom", help="Gaussian binomial coefficient")
    qbinom.add_argument("--n", type=int, required=True)
    qbinom.add_argument("--m", type=int, required=True)
    qbinom.add_argument("--q", type=int, help="evaluate at integer q")
    qbinom.set_defaults(func=run_qbinom)

    forms = sub.add_parser("forms", help="print eigenform coefficients")
    forms.add_argument("--weight", type=int, required=True)
    forms.add_argument("--pmax", type=int, default=100)
    forms.add_argument("--eigenform", help="coefficient table to inspect")
    forms.add_argument("--out", help="output path (default stdout)")
    forms.set_defaults(func=run_forms)

    selftest = sub.add_parser("selftest", help="run the built-in invariant suite")
    selftest.set_defaults(func=run_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EigenformValidationError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return 1
    except DeligneBoundError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"mathematical check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
