"""Command-line front end with deterministic, machine-readable output.

Subcommands: eco-cert, eqs, eco-line, converse, count, variation,
selftest.  Identical invocations produce byte-identical output; every
randomized command takes an explicit --seed and echoes it.  Rationals are
serialized as "p/q" strings, polynomials in the canonical text format.

Exit codes: 0 success, 1 malformed input (including usage errors),
2 violated precondition (base point on the hypersurface, degenerate
elimination, missing normalization, ...).  The environment variable
VMRT_LOG enables progress logging on stderr and never affects results.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from .eco import certify
from .errors import ParseError, VmrtError
from .lines import (
    Hypersurface,
    build_converse,
    count_vmrt_points,
    is_eco_line,
    line_certificate,
    vmrt_equations,
)
from .poly import format_poly, parse_poly
from .selftest import run_selftest
from .variation import explicit_family, variation_report

log = logging.getLogger("vmrt")


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with code 1 (parse error)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def _fraction_list(text: str) -> list[Fraction]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise ParseError("empty coordinate list")
    return [_fraction(s) for s in items]


def _load_hypersurface(path: str, n: int | None) -> Hypersurface:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    variables = tuple(f"t{i}" for i in range(n + 1)) if n is not None else None
    return Hypersurface(parse_poly(text, variables))


def _emit(report: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vmrt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eco-cert", help="certify a coefficient vector a1..a2m")
    p.add_argument("--coeffs", required=True, help='comma-separated rationals "a1,a2,...,a2m"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eqs", help="defining equations at a base point")
    p.add_argument("--f", required=True, metavar="FILE", help="polynomial file in t0..tn")
    p.add_argument("--point", required=True, help='affine base point "y1,...,yn"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eco-line", help="even-contact test for one line")
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("--point", required=True)
    p.add_argument("--dir", required=True, help='direction "z1,...,zn"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("converse", help="hypersurface realizing prescribed equations")
    p.add_argument("--b", required=True, help="comma-separated files with b_{m+1},...,b_{2m} in z1..zn")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="resultant point count for n=3, m=2")
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("--point", required=True)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("variation", help="variation verdict at the origin")
    p.add_argument("--family", choices=["m2", "mge3"], help="use a built-in explicit family")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--b", default="1")
    p.add_argument("--c", default="1")
    p.add_argument("--f", metavar="FILE", help="general f with f(1,0,...,0) = 1")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="run the full acceptance suite (JSON output)")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_eco_cert(args) -> None:
    coeffs = _fraction_list(args.coeffs)
    cert = certify(coeffs)
    report = {
        "command": "eco-cert",
        "m": cert.m,
        "coeffs": [str(c) for c in coeffs],
        "pass": cert.passed,
        "sigma": [str(s) for s in cert.sigma],
        "residuals": [str(r) for r in cert.residuals],
    }
    _emit(
        report,
        args.json,
        [
            f"pass: {cert.passed}",
            f"sigma: ({', '.join(str(s) for s in cert.sigma)})",
            f"residuals: ({', '.join(str(r) for r in cert.residuals)})",
        ],
    )


def _cmd_eqs(args) -> None:
    point = _fraction_list(args.point)
    hyp = _load_hypersurface(args.f, len(point))
    system = vmrt_equations(hyp, point)
    report = {
        "command": "eqs",
        "m": hyp.m,
        "n": hyp.n,
        "point": [str(c) for c in point],
        "equations": [
            {"degree": hyp.m + 1 + i, "poly": format_poly(eq)}
            for i, eq in enumerate(system.equations)
        ],
        "seed": None,
    }
    _emit(
        report,
        args.json,
        [f"B_{hyp.m + 1 + i} = {format_poly(eq)}" for i, eq in enumerate(system.equations)],
    )


def _cmd_eco_line(args) -> None:
    point = _fraction_list(args.point)
    direction = _fraction_list(args.dir)
    hyp = _load_hypersurface(args.f, len(point))
    verdict = is_eco_line(hyp, point, direction)
    cert = line_certificate(hyp, point, direction)
    report = {
        "command": "eco-line",
        "m": hyp.m,
        "n": hyp.n,
        "point": [str(c) for c in point],
        "dir": [str(c) for c in direction],
        "eco_line": verdict,
        "residuals": [str(r) for r in cert.residuals],
        "seed": None,
    }
    _emit(
        report,
        args.json,
        [
            f"eco_line: {verdict}",
            f"equation values: ({', '.join(str(r) for r in cert.residuals)})",
        ],
    )


def _cmd_converse(args) -> None:
    paths = [s for s in args.b.split(",") if s.strip()]
    polys = []
    for path in paths:
        try:
            text = Path(path.strip()).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
        polys.append(parse_poly(text))
    # align all inputs on one z1..zn list before validation
    n = max(len(p.vars) for p in polys)
    zvars = tuple(f"z{i}" for i in range(1, n + 1))
    widened = []
    for p in polys:
        if p.vars != zvars:
            widened.append(
                type(p)(zvars, {exp + (0,) * (n - len(p.vars)): c for exp, c in p.terms.items()})
            )
        else:
            widened.append(p)
    hyp = build_converse(widened)
    report = {
        "command": "converse",
        "m": hyp.m,
        "n": hyp.n,
        "f": format_poly(hyp.f),
        "b": [format_poly(p) for p in widened],
    }
    _emit(report, args.json, [f"f = {format_poly(hyp.f)}"])


def _cmd_count(args) -> None:
    point = _fraction_list(args.point)
    hyp = _load_hypersurface(args.f, len(point))
    degree, squarefree = count_vmrt_points(hyp, point, seed=args.seed)
    report = {
        "command": "count",
        "m": hyp.m,
        "n": hyp.n,
        "point": [str(c) for c in point],
        "degree": degree,
        "squarefree": squarefree,
        "seed": args.seed,
    }
    _emit(report, args.json, [f"degree: {degree}", f"squarefree: {squarefree}"])


def _cmd_variation(args) -> None:
    if (args.family is None) == (args.f is None):
        raise ParseError("pass exactly one of --family or --f")
    if args.family is not None:
        if args.n is None:
            raise ParseError("--family requires --n")
        m = args.m
        if args.family == "m2":
            m = 2 if m is None else m
            if m != 2:
                raise ParseError("--family m2 fixes m = 2")
        else:
            if m is None or m < 3:
                raise ParseError("--family mge3 requires --m >= 3")
        hyp = explicit_family(args.n, m, _fraction(args.b), _fraction(args.c))
    else:
        hyp = _load_hypersurface(args.f, args.n)
    rep = variation_report(hyp)
    report = {
        "command": "variation",
        "n": rep.n,
        "m": rep.m,
        "rank_dmu": rep.rank_dmu,
        "dim_orbit": rep.dim_orbit,
        "dim_intersection": rep.dim_intersection,
        "maximal": rep.maximal,
        "basis_sizes": rep.basis_sizes(),
        "seed": None,
    }
    _emit(
        report,
        args.json,
        [
            f"rank_dmu: {rep.rank_dmu}",
            f"dim_orbit: {rep.dim_orbit}",
            f"dim_intersection: {rep.dim_intersection}",
            f"maximal: {rep.maximal}",
        ],
    )


def _cmd_selftest(args) -> None:
    report = run_selftest(args.seed)
    print(json.dumps(report, indent=2))


_HANDLERS = {
    "eco-cert": _cmd_eco_cert,
    "eqs": _cmd_eqs,
    "eco-line": _cmd_eco_line,
    "converse": _cmd_converse,
    "count": _cmd_count,
    "variation": _cmd_variation,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    level = os.environ.get("VMRT_LOG")
    if level:
        logging.basicConfig(stream=sys.stderr, level=level.upper())
    args = build_parser().parse_args(argv)
    log.debug("dispatch %s", args.command)
    try:
        _HANDLERS[args.command](args)
    except ParseError as exc:
        _report_error(exc, getattr(args, "json", False))
        return 1
    except VmrtError as exc:
        _report_error(exc, getattr(args, "json", False))
        return 2
    return 0


def _report_error(exc: VmrtError, as_json: bool) -> None:
    record = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    if as_json:
        print(json.dumps(record, indent=2))
    else:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
