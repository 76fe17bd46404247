"""Command-line front end.

Subcommands: ``cayley``, ``eval``, ``verify``, ``rotate``, ``orbit`` and
``integrate``. Exit status is 0 on success, 1 when a check fails and 2 on
invalid arguments.
"""

import argparse
import json
import math
import os
import re
import sys

import numpy as np

from . import closed_form as cf
from . import dynamics as dyn
from . import group_core as gc
from .numerics import det
from .suites import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_PI_RE = re.compile(
    r"""^\s*(?P<sign>[+-]?)\s*(?P<coef>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?|\.\d+))?\s*$""",
    re.IGNORECASE,
)


def parse_angle(text):
    """Parse ``"0.25"``, ``"pi/200"``, ``"-pi/30000"``, ``"3pi/4"`` or ``"2*pi"``."""
    m = _PI_RE.match(text)
    if m:
        value = math.pi * float(m["coef"] or 1)
        if m["den"]:
            value /= float(m["den"])
        return -value if m["sign"] == "-" else value
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _fmt(x):
    return "0" if x == 0 else format(x, ".17g")


def _matrix_text(m):
    m = np.asarray(m)
    if np.iscomplexobj(m):
        cells = [[f"{z.real:+.12f}{z.imag:+.12f}j" for z in row] for row in m]
    else:
        cells = [[f"{x:+.15f}" for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def matrix_to_json(m, meta):
    m = np.asarray(m, dtype=complex)
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in m]
    return json.dumps({"rows": rows, "complex": bool(np.any(m.imag)), "meta": meta}, indent=2)


def matrix_to_csv(m):
    m = np.asarray(m, dtype=complex)
    lines = ["row,col,re,im"]
    for i, row in enumerate(m):
        for j, z in enumerate(row):
            lines.append(f"{i},{j},{_fmt(float(z.real))},{_fmt(float(z.imag))}")
    return "\n".join(lines)


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _angles(args):
    return tuple(complex(re_, im) if im else re_ for re_, im in ((args.x, args.xi), (args.y, args.yi), (args.z, args.zi)))


def _angle_meta(angles):
    return [[float(np.real(a)), float(np.imag(a))] for a in angles]


def cmd_cayley(args):
    table = gc.cayley_table()
    mismatches = gc.cayley_mismatches(table)
    if args.format == "json":
        payload = {"labels": list(gc.LABELS), "rows": [[str(c) for c in row] for row in table]}
        if args.audit:
            payload["audit"] = [
                {"relation": r.text, "holds": r.holds, "actual": r.lhs.signed()} for r in gc.relation_audit()
            ]
        payload["matches_printed"] = not mismatches
        text = json.dumps(payload, indent=2)
    else:
        lines = ["    " + " ".join(f"{lbl:>3}" for lbl in gc.LABELS)]
        for lbl, row in zip(gc.LABELS, table):
            lines.append(f"{lbl:>3} " + " ".join(f"{str(c):>3}" for c in row))
        for r, s, got, want in mismatches:
            lines.append(f"MISMATCH {r}{s}: computed {got}, printed {want}")
        if args.audit:
            lines.append("")
            lines.extend(rel.describe() for rel in gc.relation_audit())
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_FAIL if mismatches else EXIT_OK


def cmd_eval(args):
    angles = _angles(args)
    if args.u3 and args.ce is not None:
        print("error: --u3 and --ce are mutually exclusive", file=sys.stderr)
        return EXIT_USAGE
    meta = {"angles": _angle_meta(angles), "scales": list(args.ce) if args.ce else [0.0, 0.0]}
    if args.u3:
        m = cf.group_matrix_u3(angles)
        meta["kind"] = "u3"
    elif args.ce is not None:
        m = cf.group_matrix_ce(angles, args.ce)
        meta["kind"] = "ce"
    else:
        m = cf.group_matrix(angles)
        meta["kind"] = "group"
    if args.format == "json":
        text = matrix_to_json(m, meta)
    elif args.format == "csv":
        text = matrix_to_csv(m)
    else:
        text = _matrix_text(m)
        if args.u3:
            d = det(m)
            text += f"\ndet = {d.real:+.15f}{d.imag:+.15f}j"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args):
    seed = args.seed
    env_seed = os.environ.get("CUSPHERE_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"error: CUSPHERE_SEED={env_seed!r} is not an integer", file=sys.stderr)
            return EXIT_USAGE
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    checks = run_suites(args.suite, args.samples, seed, args.tol)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        text = json.dumps(
            {
                "suite": args.suite,
                "samples": args.samples,
                "seed": seed,
                "tol": args.tol,
                "checks": [
                    {"suite": c.suite, "name": c.name, "value": c.value, "threshold": c.threshold, "passed": c.passed}
                    for c in checks
                ],
                "passed": ok,
            },
            indent=2,
        )
    else:
        header = f"verify suite={args.suite} samples={args.samples} seed={seed} tol={args.tol:g}"
        footer = f"{sum(c.passed for c in checks)}/{len(checks)} checks passed"
        text = "\n".join([header] + [c.line() for c in checks] + [footer])
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rotate(args):
    if args.steps < 0:
        print("error: --steps must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    v0 = [parse_angle(t) for t in args.v0.split(",")]
    if len(v0) != 6:
        print("error: --v0 needs six comma-separated components", file=sys.stderr)
        return EXIT_USAGE
    traj = dyn.trajectory(_angles(args), args.ce, args.steps, v0, action=args.action)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            dyn.trajectory_to_csv(traj, fh)
    else:
        sys.stdout.write(dyn.trajectory_to_csv(traj))
    return EXIT_OK


def cmd_orbit(args):
    plane = "minus_" + args.plane
    maps = dyn.plane_orbit(plane)
    ok = maps[2].is_negation() and maps[5].is_identity()
    if args.format == "json":
        text = json.dumps(
            {"plane": plane, "steps": [m.axis_cells() for m in maps], "ok": ok},
            indent=2,
        )
    else:
        lines = [f"-{args.plane} oriented plane orbit", "step      X      Y      Z   slots"]
        for k, m in enumerate(maps, 1):
            cells = m.axis_cells()
            lines.append(f"{k:>4} " + " ".join(f"{cells[a]:>6}" for a in dyn.AXES) + f"   {m}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_integrate(args):
    if args.n < 8:
        print("error: --n must be >= 8", file=sys.stderr)
        return EXIT_USAGE
    value = dyn.quadrature_check(args.dim, args.n)
    mag = abs(value)
    ok = mag <= args.tol
    text = f"dim={args.dim} n={args.n} value={value.real:+.3e}{value.imag:+.3e}j |value|={mag:.3e} {'PASS' if ok else 'FAIL'}"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def _add_angle_args(p):
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=parse_angle, default=0.0, help=f"real part of the {name.upper()} angle")
        p.add_argument(f"--{name}i", type=parse_angle, default=0.0, help=f"imaginary part of the {name.upper()} angle")


def build_parser():
    parser = argparse.ArgumentParser(prog="cusphere", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cayley", help="print the Cayley table")
    p.add_argument("--audit", action="store_true", help="append the product-relation audit")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("eval", help="evaluate a group matrix")
    _add_angle_args(p)
    p.add_argument("--u3", action="store_true", help="3x3 complex form")
    p.add_argument("--ce", nargs=2, type=parse_angle, metavar=("C", "E"), help="scale factors")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rotate", help="write a trajectory as CSV")
    _add_angle_args(p)
    p.add_argument("--ce", nargs=2, type=parse_angle, metavar=("C", "E"))
    p.add_argument("--steps", type=int, default=2000)
    p.add_argument("--v0", default="1,0,0,0,0,0")
    p.add_argument("--action", choices=("row", "column"), default="row")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("orbit", help="oriented-plane orbit of -c or -e")
    p.add_argument("--plane", choices=("c", "e"), required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("integrate", help="trapezoid check of the periodic integrals")
    p.add_argument("--dim", type=int, choices=(1, 3), default=1)
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_integrate)
    return parser


def _protect_negative_angles(argv):
    # argparse takes "-pi/200" for an option flag; hand it a plain number instead
    return [repr(parse_angle(t)) if t.startswith("-") and _PI_RE.match(t) else t for t in argv]


def main(argv=None):
    parser = build_parser()
    argv = _protect_negative_angles(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
