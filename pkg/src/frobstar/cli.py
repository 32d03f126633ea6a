"""Command-line entry point: ``frobstar {frobenius,genus,apery,verify,series}``.

Exit codes: 0 all checks pass, 1 usage or domain error, 2 closed form
refused for an exceptional case, 3 a mismatch was found.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import core, frame, series, star
from .errors import ExceptionalCase, FrameInvalid, FrobstarError
from .verify import sweep

log = logging.getLogger("frobstar")

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"5..20"`` -> ``(5, 20)``; a bare ``"7"`` means ``7..7``."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _target(args) -> tuple[core.Triple, star.StarParams | None]:
    if args.triple is not None:
        if args.a is not None or args.n is not None:
            raise UsageError("give either --triple or --a/--n, not both")
        return core.validate_triple(*args.triple), None
    if args.a is None or args.n is None:
        raise UsageError("--a and --n are required (or --triple)")
    P = star.StarParams(args.a, args.n)
    return star.star_triple(P), P


def _compute(kind: str, args, out) -> int:
    T, P = _target(args)
    methods = ["closed", "frame", "oracle"] if args.method == "all" else [args.method]
    if args.p != 0 and methods != ["oracle"]:
        raise UsageError(f"--method {args.method} exists only for p = 0; use --method oracle")
    if P is None and methods != ["oracle"]:
        raise UsageError("closed and frame methods need --a/--n")

    values: dict[str, int | str] = {}
    code = EXIT_OK
    for m in methods:
        try:
            if m == "oracle":
                values[m] = (core.frobenius if kind == "frobenius" else core.genus)(T, args.p)
            elif m == "closed":
                values[m] = (star.closed_frobenius if kind == "frobenius" else star.closed_genus)(P)
            else:
                F = star.frame_parameters(P)
                values[m] = (frame.frobenius_from_frame if kind == "frobenius" else frame.genus_from_frame)(F, T)
        except ExceptionalCase as exc:
            if args.method != "all":
                print(f"refused: {exc}", file=sys.stderr)
                return EXIT_REFUSED
            values[m] = "refused"
        except FrameInvalid as exc:
            print(f"frame invalid: {exc}", file=sys.stderr)
            values[m] = "invalid"
            code = EXIT_MISMATCH

    label = f"p={args.p} " if args.p else ""
    for m, v in values.items():
        print(f"{kind} {label}{m}: {v}", file=out)
    if args.method == "all":
        if "refused" in values.values():
            print("closed_form: refused (exceptional case)", file=out)
            print("agree: n/a", file=out)
        else:
            agree = all(isinstance(v, int) for v in values.values()) and len(set(values.values())) == 1
            print(f"agree: {str(agree).lower()}", file=out)
            if not agree:
                code = EXIT_MISMATCH
    return code


def cmd_frobenius(args, out=sys.stdout) -> int:
    return _compute("frobenius", args, out)


def cmd_genus(args, out=sys.stdout) -> int:
    return _compute("genus", args, out)


def _render_grid(F: frame.AperyFrame, T: core.Triple) -> str:
    width = len(str((F.y0 - 1) * T.a2 + (F.z1 - 1) * T.a3))
    lines = [f"Apery frame y0={F.y0} z0={F.z0} y1={F.y1} z1={F.z1} (rows z, columns y)"]
    for z in range(F.z1):
        cells = [str(y * T.a2 + z * T.a3).rjust(width) for y in range(F.row_length(z))]
        lines.append(f"z={z:<3d} " + " ".join(cells))
    return "\n".join(lines)


def cmd_apery(args, out=sys.stdout) -> int:
    T, P = _target(args)
    ap = core.apery_set(T, args.p)
    if args.format == "json":
        body = {
            "triple": list(T.as_tuple()),
            "p": args.p,
            "elements": list(ap.elements),
            "max": max(ap),
            "frobenius": max(ap) - T.a1,
            "genus": core.genus_from_apery(ap),
        }
        print(json.dumps(body, indent=2), file=out)
        return EXIT_OK

    F = None
    if P is not None and args.p == 0 and P.a >= 5:
        try:
            F = star.frame_parameters(P)
        except FrobstarError as exc:
            log.info("no star frame: %s", exc)
        if F is not None and frame.frame_apery_values(F, T) != ap:
            log.warning("star frame for (%d, %d) differs from the oracle; showing the flat list", P.a, P.n)
            F = None
    if F is not None:
        print(_render_grid(F, T), file=out)
    else:
        print(f"Ap_{args.p}{T.as_tuple()} = {list(ap.elements)}", file=out)
    return EXIT_OK


def cmd_verify(args, out=sys.stdout) -> int:
    if args.p != 0:
        raise UsageError("verify compares closed forms, which exist only for p = 0")
    if args.a is None or args.n is None:
        raise UsageError("verify needs --a lo..hi and --n lo..hi")
    start = time.perf_counter()
    try:
        report = sweep(args.a, args.n, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = report.to_csv() if args.format == "csv" else report.to_json()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    s = report.summary
    print(
        f"{s['checked']} checked, {s['mismatches']} mismatches, {s['frame_failures']} frame failures, "
        f"{s['refusals']} exceptional; {time.perf_counter() - start:.2f}s",
        file=sys.stderr,
    )
    for r in report.failures():
        print(f"MISMATCH a={r.a} n={r.n}: closed {r.closed_g0}/{r.closed_n0} "
              f"oracle {r.oracle_g0}/{r.oracle_n0} frame_valid={r.frame_valid}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_series(args, out=sys.stdout) -> int:
    ident = args.identity
    if ident == "reciprocal":
        checks = [series.reciprocal_check(args.a, args.terms or 10**6)]
    elif ident in ("exp", "exp_alternating"):
        pair = series.exp_sums_check(args.a, args.terms or 30)
        checks = [c for c in pair if c.identity_id == ident]
    else:
        if args.b is None:
            raise UsageError("geometric needs --b")
        checks = [series.geometric_check(args.a, args.b, args.terms or 200)]
    for c in checks:
        b = "" if c.b is None else f" b={c.b:g}"
        print(f"{c.identity_id} a={c.a}{b} terms={c.partial_terms}", file=out)
        print(f"  partial   {c.partial_value:.15g}", file=out)
        print(f"  closed    {c.closed_value:.15g}", file=out)
        print(f"  abs_error {c.abs_error:.3e} (tolerance {c.tolerance:.0e}) {'PASS' if c.passed else 'FAIL'}",
              file=out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobstar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def target_flags(p):
        p.add_argument("--a", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--triple", type=int, nargs=3, metavar=("A1", "A2", "A3"))
        p.add_argument("--p", type=int, default=0)

    for name, fn in (("frobenius", cmd_frobenius), ("genus", cmd_genus)):
        p = sub.add_parser(name, help=f"{name} of a star triple or an explicit triple")
        target_flags(p)
        p.add_argument("--method", choices=("closed", "frame", "oracle", "all"), default="all")
        p.set_defaults(func=fn)

    p = sub.add_parser("apery", help="dump the Apery set")
    target_flags(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("verify", help="sweep (a, n) ranges against the oracle")
    p.add_argument("--a", type=parse_range)
    p.add_argument("--n", type=parse_range)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="numerical check of a star-number series")
    p.add_argument("identity", choices=("reciprocal", "exp", "exp_alternating", "geometric"))
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=float)
    p.add_argument("--terms", type=int)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    logging.basicConfig(level=os.environ.get("FROBSTAR_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "p", 0) < 0:
        print("error: --p must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out or sys.stdout)
    except (UsageError, FrobstarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
