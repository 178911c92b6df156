"""Command-line front end.

Exit status: 0 on success or a passing check, 1 when an obstruction or
theorem check fails, 2 on malformed input.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .alexander import AlexanderPoly, make_poly, torus_knot_poly
from .errors import SurgeulError
from .lens import d_lens_table
from .obstruction import lspace_obstruction, small_slope_check, verify_theorem12
from .selftest import DEFAULT_SEED, run_selftest
from .serialize import (
    format_rational,
    load_d_file,
    table_to_csv,
    table_to_json,
    table_to_pretty,
)
from .surgery import SurgerySlope, eul_table


def _int_list(text: str, what: str, n: int | None = None) -> list[int]:
    try:
        vals = [int(v.strip()) for v in text.split(",")]
    except ValueError:
        raise SurgeulError(f"{what} must be a comma-separated integer list, got {text!r}")
    if n is not None and len(vals) != n:
        raise SurgeulError(f"{what} needs exactly {n} integers, got {len(vals)}")
    return vals


def _add_knot_args(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--knot", help="Alexander coefficients a0,a1,...,ag")
    grp.add_argument("--torus-knot", help="torus knot parameters a,b")
    sub.add_argument("--unchecked", action="store_true",
                     help="skip the Delta(1) = 1 normalization check")


def _add_slope_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)


def _knot_from(args) -> AlexanderPoly:
    if args.torus_knot is not None:
        a, b = _int_list(args.torus_knot, "--torus-knot", 2)
        return torus_knot_poly(a, b)
    return make_poly(_int_list(args.knot, "--knot"), unchecked=args.unchecked)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgeul",
        description="Renormalized Euler characteristics, torsion sums and "
                    "L-space obstructions for p/q surgeries on knots in S^3.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    tab = subs.add_parser("table", help="full Eul table for S^3_{p/q}(K)")
    _add_knot_args(tab)
    _add_slope_args(tab)
    tab.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    tab.add_argument("--decimal", type=int, metavar="K",
                     help="add a K-digit rounded display column (exact values remain)")

    lens = subs.add_parser("lens", help="d-invariant table of S^3_{p/q}(U) = L(-p,q)")
    _add_slope_args(lens)
    lens.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")

    obs = subs.add_parser("obstruct", help="L-space surgery obstruction test")
    obs.add_argument("--d-file", required=True,
                     help='JSON file {"d": ["num/den", ...]} with p entries')
    _add_slope_args(obs)
    obs.add_argument("--strict", action="store_true",
                     help="additionally require extracted t_i >= 0")

    ver = subs.add_parser("verify", help="symmetry theorem / small-slope sweep")
    _add_knot_args(ver)
    _add_slope_args(ver)
    ver.add_argument("--n-range", default="0,0", metavar="A,B",
                     help="inclusive range of centers n (p/q > 1 only)")

    st = subs.add_parser("selftest", help="randomized exact-invariant suites")
    st.add_argument("--seed", type=int, default=None,
                    help="RNG seed (default: SURGEUL_SEED env or builtin)")
    st.add_argument("--cases", type=int, default=40)
    st.add_argument("--inject-fault", action="store_true",
                    help="negative control: corrupt the reference formula")
    return parser


def _cmd_table(args) -> int:
    table = eul_table(_knot_from(args), SurgerySlope(args.p, args.q))
    render = {"json": table_to_json, "csv": table_to_csv, "pretty": table_to_pretty}
    out = render[args.format](table, args.decimal)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def _cmd_lens(args) -> int:
    d = d_lens_table(args.p, args.q)
    if args.format == "json":
        payload = {"p": args.p, "q": args.q, "d": [format_rational(v) for v in d]}
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("label,d")
        for l, v in enumerate(d):
            print(f"{l},{format_rational(v)}")
    else:
        print(f"d(L({-args.p},{args.q}), l) for l = 0..{args.p - 1}")
        for l, v in enumerate(d):
            print(f"  {l}: {format_rational(v)}")
    return 0


def _cmd_obstruct(args) -> int:
    with open(args.d_file, encoding="utf-8") as fh:
        d = load_d_file(fh.read(), args.p)
    report = lspace_obstruction(d, SurgerySlope(args.p, args.q), strict=args.strict)
    if report.verdict:
        t = {k: format_rational(v) for k, v in sorted(report.t_sequence.items())}
        print(f"PASS: consistent with an L-space surgery "
              f"(shift={report.witness_shift}, reflected={report.reflected})")
        print(f"extracted t: {json.dumps(t)}")
        return 0
    print("FAIL: no affine identification satisfies the correction-term symmetry")
    for label, expected, actual in report.violations[:10]:
        print(f"  label {label}: expected {format_rational(expected)}, "
              f"got {format_rational(actual)}")
    if len(report.violations) > 10:
        print(f"  ... {len(report.violations) - 10} more")
    return 1


def _cmd_verify(args) -> int:
    K = _knot_from(args)
    slope = SurgerySlope(args.p, args.q)
    if slope.q >= 1 and Fraction(slope.p, slope.q) > 1:
        a, b = _int_list(args.n_range, "--n-range", 2)
        ok = True
        for n in range(a, b + 1):
            report = verify_theorem12(K, slope, n)
            status = "pass" if report.passed else "FAIL"
            print(f"n={n}: r={report.r} window={report.window} -> {status}")
            for c in report.checks:
                if not c.ok:
                    print(f"    i={c.i} label={c.label}: "
                          f"S={format_rational(c.actual)} != t_i={c.expected}")
            ok = ok and report.passed
        return 0 if ok else 1
    report = small_slope_check(K, slope)
    shape = "single bump" if report.single_bump else "multiple nonzero labels"
    print(f"small-slope check: {'pass' if report.passed else 'FAIL'} "
          f"(ceil(q/p)*a_1 = {report.expected_value} at label p-1: "
          f"{report.bump_at_minus_one}; {shape})")
    return 0 if report.passed else 1


def _cmd_selftest(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("SURGEUL_SEED", DEFAULT_SEED))
    ok, report = run_selftest(seed=seed, count=args.cases,
                              inject_fault=args.inject_fault)
    sys.stdout.write(report)
    return 0 if ok else 1


# options whose values may start with "-" (negative coefficients / ranges);
# folded into --opt=value form so argparse does not mistake them for flags
_DASH_VALUE_OPTS = {"--knot", "--torus-knot", "--n-range"}


def _fold_dash_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for arg in it:
        if arg in _DASH_VALUE_OPTS:
            value = next(it, None)
            if value is None:
                out.append(arg)
            else:
                out.append(f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_fold_dash_values(sys.argv[1:] if argv is None else argv))
    handlers = {
        "table": _cmd_table,
        "lens": _cmd_lens,
        "obstruct": _cmd_obstruct,
        "verify": _cmd_verify,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except SurgeulError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
