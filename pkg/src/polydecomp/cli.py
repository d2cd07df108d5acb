"""Command-line front end: compose, decompose, collide, estimate.

Polynomials are written as comma-separated coefficients in descending power
order including the leading and constant terms ("1,4,5,2,0" is
x^4+4x^3+5x^2+2x); rationals as "p/q", complexes as "a+bi".  Exit codes:
0 success, 2 usage/parse error, 3 domain error (prime degree, or a required
decomposition that does not exist).  Algebraic commands default to exact
rationals, estimation to real doubles.  POLYDECOMP_THREADS caps estimator
workers; identical flags and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .collisions import CollisionParameterError, CollisionParams, alpha_exp, alpha_trig
from .decompose import DivisorError, is_composite, is_decomposable, try_decompose
from .density import REPORT_COLUMNS, TubeSpec, density_report, estimate_density
from .polynomial import (
    Polynomial,
    compose,
    format_polynomial,
    is_monic_original,
    parse_polynomial,
    parse_scalar,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

ALGEBRAIC_FIELDS = ("rational", "real64", "complex64")
ESTIMATE_FIELDS = {"real64": "real", "complex64": "complex"}


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _parse_monic_original(text: str, field: str) -> Polynomial:
    try:
        p = parse_polynomial(text, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not is_monic_original(p):
        raise UsageError(f"polynomial {text!r} is not monic original")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_compose(args) -> int:
    g = _parse_monic_original(args.g, args.field)
    h = _parse_monic_original(args.h, args.field)
    _emit(format_polynomial(compose(g, h)), args.out)
    return EXIT_OK


def _decomposition_row(d: int, dec) -> dict:
    return {"d": d, "g": format_polynomial(dec.g), "h": format_polynomial(dec.h)}


def _cmd_decompose(args) -> int:
    f = _parse_monic_original(args.f, args.field)
    n = f.degree
    if args.d is not None:
        if args.d in (1, n) or n % args.d != 0:
            raise UsageError(f"{args.d} is not a proper divisor of {n}")
        dec = try_decompose(f, args.d)
        rows = [] if dec is None else [_decomposition_row(args.d, dec)]
        _emit(json.dumps(rows), args.out)
        if dec is None:
            print(f"no decomposition of degree-{n} input at d={args.d}", file=sys.stderr)
            return EXIT_DOMAIN
        return EXIT_OK
    if not is_composite(n):
        raise DomainError(
            f"degree {n} has no proper divisors; nothing of prime degree decomposes"
        )
    rows = [_decomposition_row(d, dec) for d, dec in is_decomposable(f)]
    _emit(json.dumps(rows), args.out)
    return EXIT_OK


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {flag} value {text!r}") from None


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {flag} value {text!r}") from None


def _cmd_estimate(args) -> int:
    if args.field not in ESTIMATE_FIELDS:
        raise UsageError("estimation needs --field real64 or complex64")
    field = ESTIMATE_FIELDS[args.field]
    if args.union:
        divisors: list[int | None] = [None]
    elif args.d is not None:
        divisors = list(_parse_int_list(args.d, "--d"))
    else:
        raise UsageError("estimate needs --d or --union")
    eps_values = _parse_float_list(args.eps, "--eps")
    rows = []
    for d in divisors:
        for eps in eps_values:
            try:
                spec = TubeSpec(n=args.n, d=d, epsilon=eps, B=args.B, field=field)
                result = estimate_density(
                    spec, args.samples, seed=args.seed, mode=args.mode
                )
            except (ValueError, DivisorError) as exc:
                raise UsageError(str(exc)) from None
            rows.append(density_report(spec, result))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue().rstrip("\n"), args.out)
    else:
        _emit(json.dumps(rows[0] if len(rows) == 1 else rows), args.out)
    return EXIT_OK


def _collision_params(payload: dict, field: str) -> tuple[CollisionParams, str, int, int]:
    try:
        variant = payload["variant"]
        n = int(payload["n"])
        d = int(payload["d"])
        u = _parse_monic_original(str(payload["u"]), field)
        v = _parse_monic_original(str(payload["v"]), field)
        a = parse_scalar(str(payload.get("a", "0")), field)
    except KeyError as exc:
        raise UsageError(f"collision parameters missing {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if variant not in ("exp", "trig"):
        raise UsageError(f"unknown collision variant {variant!r}")
    if d <= 0 or n % d != 0:
        raise UsageError(f"{d} does not divide {n}")
    e = n // d
    if variant == "exp":
        if not isinstance(payload.get("w"), list):
            raise UsageError("exponential variant needs w as a list of lower coefficients")
        lower = [parse_scalar(str(c), field) for c in payload["w"]]
        w = Polynomial(list(reversed(lower)) + [1])
        params = CollisionParams(n=n, d=d, u=u, v=v, a=a, w=w)
    else:
        if "z" not in payload:
            raise UsageError("trigonometric variant needs z")
        z = parse_scalar(str(payload["z"]), field)
        params = CollisionParams(n=n, d=d, u=u, v=v, a=a, z=z)
    return params, variant, d, e


def _cmd_collide(args) -> int:
    try:
        payload = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON parameters: {exc}") from None
    params, variant, d, e = _collision_params(payload, args.field)
    try:
        f = alpha_exp(params) if variant == "exp" else alpha_trig(params)
    except CollisionParameterError as exc:
        raise UsageError(str(exc)) from None
    report = {
        "f": format_polynomial(f),
        "d": d,
        "e": e,
        "decomposes_at_d": try_decompose(f, d) is not None,
        "decomposes_at_e": try_decompose(f, e) is not None,
    }
    _emit(json.dumps(report), args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydecomp",
        description="Compose and decompose polynomials, build collisions, "
        "and run tube-density experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose two monic original polynomials")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--field", choices=ALGEBRAIC_FIELDS, default="rational")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("decompose", help="find decompositions f = g(h)")
    p.add_argument("f")
    p.add_argument("--d", type=int, default=None, help="only this divisor")
    p.add_argument("--field", choices=ALGEBRAIC_FIELDS, default="rational")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("estimate", help="Monte Carlo tube-density estimate")
    p.add_argument("--n", type=int, required=True)
    target = p.add_mutually_exclusive_group()
    target.add_argument("--d", help="proper divisor, or comma list for a sweep")
    target.add_argument("--union", action="store_true", help="union of the two largest components")
    p.add_argument("--eps", required=True, help="tube radius, or comma list for a sweep")
    p.add_argument("--B", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", choices=ALGEBRAIC_FIELDS, default="real64")
    p.add_argument("--mode", choices=("plain", "conditional"), default="plain")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("collide", help="build a doubly decomposable polynomial")
    p.add_argument(
        "params",
        help='JSON: {"variant": "exp"|"trig", "n", "d", "u", "v", "a", "w"|"z"}',
    )
    p.add_argument("--field", choices=ALGEBRAIC_FIELDS, default="rational")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_collide)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
