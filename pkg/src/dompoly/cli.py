"""Command-line interface: ``compute``, ``verify``, ``sequence`` and ``interpolate``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
Global flags may also be given as ``DOMPOLY_FORMAT``, ``DOMPOLY_CAP_BRUTE``,
``DOMPOLY_CAP_PRODUCT`` and ``DOMPOLY_SEED``; flags win over the environment.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import kernel
from .config import ENV_PREFIX, CapacityError, caps_from_env, default_seed, set_caps
from .expr import build_graph, has_free_n, parse_expr
from .graph import GraphError
from .methods import METHODS, MethodError, compute
from .polynomial import IntPolynomial, parse_rational
from .reduction import RejectedGammaError, brute_force_oracle, reduction_trace, twin_quotient_oracle
from .sequences import (CoeffIndexSpec, FamilySpec, TooFewTermsError, domination_numbers,
                        extract_coeff_sequence, family_polynomials, guess_cfinite, guess_holonomic,
                        guess_polyx_recurrence, partial_sum_sequence, sequence_csv, verify_recurrence)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
FORMATS = ("text", "json", "csv")
GUESS_DEFAULTS = {"cfinite": (4, 0), "holonomic": (2, 1), "polyx": (3, 1)}


class UsageError(ValueError):
    pass


def parse_affine(text: str, var: str = "n") -> Tuple[Fraction, Fraction]:
    """``(q, p)`` for a rational affine form such as ``n``, ``3n/2``, ``n/2+1``, ``-2*n+1/3``."""
    s = text.replace(" ", "")
    if not s:
        raise UsageError("empty index expression")
    if not re.fullmatch(r"(?:[+-]?[^+-]+)+", s):
        raise UsageError(f"cannot parse index expression {text!r}")
    q, p = Fraction(0), Fraction(0)
    try:
        for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
            k = -1 if sign == "-" else 1
            if var in term:
                rest = term.replace(var, "", 1).replace("*", "")
                if rest.startswith("/"):
                    rest = "1" + rest
                q += k * (parse_rational(rest) if rest else Fraction(1))
            else:
                p += k * parse_rational(term)
    except ValueError:
        raise UsageError(f"cannot parse index expression {text!r}") from None
    return q, p


def _coeffs(poly: IntPolynomial) -> List[str]:
    return [str(c) for c in poly.coeffs]


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- compute ----------------------------------------------------------------

def cmd_compute(args) -> int:
    e = parse_expr(args.graph)
    if has_free_n(e) and args.n is None:
        raise UsageError("expression has a free n; pass --n")
    poly, used = compute(e, args.method, n=args.n)
    fmt = args.format or "text"
    if fmt == "json":
        _emit(json.dumps({"graph": args.graph, "n": args.n, "method": used,
                          "coefficients": _coeffs(poly),
                          "domination_number": poly.min_support() if poly else None}))
    elif fmt == "csv":
        _emit("degree,coefficient\n" + "".join(f"{i},{c}\n" for i, c in enumerate(poly.coeffs)))
    else:
        _emit(f"D(x) = {poly.format('x')}\nmethod: {used}")
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    reports = run_suite(args.suite, max_n=args.max_n, trials=args.trials, seed=args.seed)
    ok = all(r.passed for r in reports)
    fmt = args.format or "json"
    if fmt == "text":
        for r in reports:
            _emit(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({len(r.checks)} checks)")
            for c in r.checks:
                if not c.passed:
                    _emit(f"  {c.label}: {c.detail}")
    else:
        _emit(json.dumps({"passed": ok, "seed": args.seed,
                          "suites": [r.to_dict() for r in reports]}, indent=2))
    return EXIT_OK if ok else EXIT_FAIL


# -- sequence ---------------------------------------------------------------

def cmd_sequence(args) -> int:
    e = parse_expr(args.family)
    if not has_free_n(e):
        raise UsageError("family expression needs a free n")
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    modes = [bool(args.polys), bool(args.gamma_number), args.partial_sum is not None, args.coeff is not None]
    if sum(modes) > 1:
        raise UsageError("choose one of --polys, --gamma-number, --partial-sum, --coeff")
    if args.guess == "polyx" and not args.polys:
        raise UsageError("--guess polyx works on polynomials; add --polys")
    if args.guess in ("cfinite", "holonomic") and args.polys:
        raise UsageError(f"--guess {args.guess} needs a scalar sequence, not --polys")

    ns = list(range(args.start, args.start + args.terms))
    fam = FamilySpec(e, tuple(ns))
    polys = family_polynomials(fam, args.method)
    if args.polys:
        data = polys
    elif args.gamma_number:
        data = domination_numbers(polys)
    elif args.partial_sum is not None:
        q, p = parse_affine(args.partial_sum)
        data = partial_sum_sequence(polys, q, p, fam.sizes())
    else:
        q, p = parse_affine(args.coeff or "n")
        data = extract_coeff_sequence(polys, CoeffIndexSpec(q, p, args.rounding), start=args.start)

    rec = report = None
    if args.guess:
        order, degree = GUESS_DEFAULTS[args.guess]
        order = args.max_order if args.max_order is not None else order
        degree = args.max_degree if args.max_degree is not None else degree
        if args.guess == "cfinite":
            rec = guess_cfinite(data, order)
        elif args.guess == "holonomic":
            rec = guess_holonomic(data, order, degree, offset=args.start)
        else:
            rec = guess_polyx_recurrence(data, order, degree)
        if rec is not None:
            report = verify_recurrence(data, rec)

    fmt = args.format or "text"
    shown = [p.format("x") for p in data] if args.polys else data
    if fmt == "json":
        out = {"family": args.family, "n": ns}
        out["values"] = [_coeffs(p) for p in data] if args.polys else [str(v) for v in data]
        if args.guess:
            out["recurrence"] = rec.to_dict() if rec else None
            out["verified"] = report.passed if report else None
        _emit(json.dumps(out))
    elif fmt == "csv":
        _emit(sequence_csv(shown, ns))
    else:
        for n, v in zip(ns, shown):
            _emit(f"{n} {v}")
        if args.guess:
            if rec is None:
                _emit("recurrence: none found within bounds")
            else:
                _emit(f"recurrence: {rec}\nverified: {report.passed} ({report.checked} checks)")
    return EXIT_OK


# -- interpolate ------------------------------------------------------------

def cmd_interpolate(args) -> int:
    try:
        gamma = parse_rational(args.gamma)
    except ValueError as exc:
        raise UsageError(f"bad --gamma: {exc}") from None
    e = parse_expr(args.graph)
    if has_free_n(e) and args.n is None:
        raise UsageError("expression has a free n; pass --n")
    G = build_graph(e, args.n)
    make = twin_quotient_oracle if args.oracle == "twin" else brute_force_oracle
    trace = reduction_trace(G, make(gamma))
    fmt = args.format or "json"
    if fmt == "text":
        for r, a, v in trace.rows:
            _emit(f"r={r} abscissa={a} value={v}")
        _emit(f"D(x) = {trace.polynomial.format('x')}\nqueries: {trace.queries}")
    else:
        _emit(trace.to_json())
    return EXIT_OK


# -- entry point ------------------------------------------------------------

def _env(name: str) -> Optional[str]:
    return os.environ.get(ENV_PREFIX + name)


def _add_globals(ap: argparse.ArgumentParser, defaults: Optional[dict]) -> None:
    ap.add_argument("--format", choices=FORMATS, help="output format (default depends on subcommand)")
    ap.add_argument("--cap-brute", type=int, help="max vertices for subset enumeration")
    ap.add_argument("--cap-product", type=int, help="max vertices of a product graph")
    ap.add_argument("--seed", type=int, help="seed for randomized verify suites")
    ap.add_argument("--backend", choices=("cython", "python"), help="subset-counting kernel")
    if defaults:
        ap.set_defaults(**defaults)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dompoly", description="Exact domination polynomials of graphs.")
    _add_globals(ap, {"format": _env("FORMAT")})
    # Subcommands accept the same flags; SUPPRESS keeps them from clobbering earlier values.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    _add_globals(common, None)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="domination polynomial of one graph")
    p.add_argument("--graph", required=True, help='expression such as "cart(P:6,K:2)"')
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--n", type=int, help="value for a free n in the expression")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run a cross-verification suite")
    p.add_argument("suite", help="one of: all, " + ", ".join(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--trials", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", parents=[common], help="coefficient sequences and recurrence guessing")
    p.add_argument("--family", required=True, help='expression with free n, e.g. "cart(P:n,K:2)"')
    p.add_argument("--coeff", help="coefficient index, affine in n (default n)")
    p.add_argument("--rounding", choices=("floor", "ceil"), default="floor")
    p.add_argument("--partial-sum", help="count sets of size <= floor(q*|V|+p), given as affine in n=|V|")
    p.add_argument("--polys", action="store_true", help="emit the polynomials themselves")
    p.add_argument("--gamma-number", action="store_true", help="emit domination numbers")
    p.add_argument("--terms", type=int, default=12)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--guess", choices=tuple(GUESS_DEFAULTS))
    p.add_argument("--max-order", type=int)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("interpolate", parents=[common], help="recover D(G, x) from evaluations at one point")
    p.add_argument("--graph", required=True)
    p.add_argument("--gamma", required=True, help="rational evaluation point, a or a/b")
    p.add_argument("--oracle", choices=("brute", "twin"), default="brute")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_interpolate)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        caps = caps_from_env().with_overrides(
            **{k: v for k, v in (("brute", args.cap_brute), ("product", args.cap_product)) if v is not None})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    previous = set_caps(caps)
    prev_backend = kernel.get_backend()
    if args.seed is None:
        args.seed = default_seed()
    try:
        if args.backend:
            kernel.set_backend(args.backend)
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, GraphError, MethodError, RejectedGammaError, TooFewTermsError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_caps(previous)
        kernel.set_backend(prev_backend)


if __name__ == "__main__":
    sys.exit(main())
