"""Command-line front door: solve, verify, scan, classify, samples, and the
motivating absolute-value demo.

Every command prints one envelope, as JSON (default) or text, shaped
{"command", "inputs", "status", "result"}.  Exit codes: 0 = ok / verified,
2 = no solution, 1 = error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .oracle import (DEFAULT_EXCLUSION, DEFAULT_MATCH_TOL, DEFAULT_POINTS,
                     compare, grid_scan, refine_roots)
from .quadratic import (Interval, Quadratic, both_roots_inside, discriminant,
                        locate, one_inside_one_outside)
from .solver import enumerate_solutions, solve_abs, solve_integer, solve_real
from .trig import classify_domain, evaluate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_SOLUTION = 2

_ERRATA_MINUS_TWO = (
    "errata: the often-quoted family x = 2K*pi +/- pi/4 for target -2 fails "
    "direct evaluation: F(pi/4) - (-2) = 8.242640687...; the verified family "
    "is x = 3*pi/4 + 2K*pi and x = 7*pi/4 + 2K*pi."
)


class CliError(Exception):
    """User-facing command error; rendered as an error envelope, exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route usage errors through the envelope path
        raise CliError(message)


def _angle(value: float, form: str | None = None) -> dict:
    out = {"radians": value,
           "radians_17g": f"{value:.17g}",
           "over_pi": value / math.pi}
    if form is not None:
        out["form"] = form
    return out


def _family_payload(fam) -> dict:
    return {
        "roots": [{"s": r.r, "s_17g": f"{r.r:.17g}",
                   "phi": _angle(r.phi), "multiplicity": r.multiplicity}
                  for r in fam.roots],
        "residues": [_angle(rc.offset, rc.form) for rc in fam.residues],
    }


def _compare_payload(report) -> dict:
    return {
        "matched": report.matched,
        "tol": report.tol,
        "pairs": [list(p) for p in report.pairs],
        "unmatched_closed": list(report.unmatched_closed),
        "unmatched_numeric": list(report.unmatched_numeric),
        "notes": list(report.notes),
    }


def _parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise CliError(f"bad --k-range {text!r}, expected A..B")
    try:
        k_lo, k_hi = int(lo), int(hi)
    except ValueError:
        raise CliError(f"bad --k-range {text!r}, expected integers A..B")
    if k_lo > k_hi:
        raise CliError(f"bad --k-range {text!r}, need A <= B")
    return k_lo, k_hi


def _target_family(args):
    if args.integer_mode:
        if not float(args.target).is_integer():
            raise CliError(f"--integer-mode needs an integer target, "
                           f"got {args.target!r}")
        return solve_integer(int(args.target))
    return solve_real(float(args.target))


def _cmd_solve(args) -> tuple[dict, int]:
    k_lo, k_hi = _parse_k_range(args.k_range)
    fam = _target_family(args)
    values = enumerate_solutions(fam, k_lo, k_hi)
    result = _family_payload(fam)
    result["enumeration"] = {
        "k_lo": k_lo, "k_hi": k_hi,
        "solutions": [_angle(v) for v in values],
    }
    status = "no_solution" if fam.is_empty else "ok"
    code = EXIT_NO_SOLUTION if fam.is_empty else EXIT_OK
    envelope = {
        "command": "solve",
        "inputs": {"target": args.target, "integer_mode": args.integer_mode,
                   "k_range": args.k_range},
        "status": status,
        "result": result,
    }
    return envelope, code


def _cmd_verify(args) -> tuple[dict, int]:
    fam = _target_family(args)
    c = float(args.target)
    numeric = refine_roots(c, args.exclusion)
    report = compare(fam, numeric, args.tol)
    scan = grid_scan(c, args.points, args.exclusion)
    notes = []
    if c == -2.0:
        notes.append(_ERRATA_MINUS_TWO)
    result = _family_payload(fam)
    result.update({
        "numeric_roots": [_angle(v) for v in numeric],
        "comparison": _compare_payload(report),
        "min_gap": scan.min_gap,
        "argmin": _angle(scan.argmin),
        "notes": notes,
    })
    status = "ok" if report.matched else "error"
    envelope = {
        "command": "verify",
        "inputs": {"target": args.target, "integer_mode": args.integer_mode,
                   "tol": args.tol, "points": args.points,
                   "exclusion": args.exclusion},
        "status": status,
        "result": result,
    }
    return envelope, EXIT_OK if report.matched else EXIT_ERROR


def _cmd_scan(args) -> tuple[dict, int]:
    scan = grid_scan(float(args.target), args.points, args.exclusion)
    envelope = {
        "command": "scan",
        "inputs": {"target": args.target, "points": args.points,
                   "exclusion": args.exclusion},
        "status": "ok",
        "result": {"min_gap": scan.min_gap,
                   "min_gap_17g": f"{scan.min_gap:.17g}",
                   "argmin": _angle(scan.argmin)},
    }
    return envelope, EXIT_OK


def _cmd_classify(args) -> tuple[dict, int]:
    try:
        q = Quadratic(args.a, args.b, args.c)
        iv = Interval(args.lo, args.hi)
    except ValueError as exc:
        raise CliError(str(exc))
    loc = locate(q, iv, args.boundary_tol)
    f_lo, f_hi = q(iv.lo), q(iv.hi)
    product = f_lo * f_hi
    disc = discriminant(q)
    vertex = -q.b / (2.0 * q.a)
    envelope = {
        "command": "classify",
        "inputs": {"a": args.a, "b": args.b, "c": args.c,
                   "lo": args.lo, "hi": args.hi,
                   "boundary_tol": args.boundary_tol},
        "status": "ok",
        "result": {
            "kind": loc.kind.value,
            "roots": list(loc.roots),
            "roots_17g": [f"{r:.17g}" for r in loc.roots],
            "placements": [p.value for p in loc.placements],
            "conditions": {
                "discriminant": disc,
                "discriminant_positive": disc > 0.0,
                "endpoints_same_side": bool(q.a * f_lo > 0.0
                                            and q.a * f_hi > 0.0),
                "vertex": vertex,
                "vertex_inside": bool(iv.lo < vertex < iv.hi),
            },
            "endpoint_product_sign": (0 if product == 0.0
                                      else int(math.copysign(1.0, product))),
            "both_roots_inside": both_roots_inside(q, iv),
            "one_inside_one_outside": one_inside_one_outside(q, iv),
        },
    }
    return envelope, EXIT_OK


def _cmd_samples(args) -> tuple[dict, int]:
    if args.step <= 0.0:
        raise CliError("--step must be positive")
    if not args.start < args.stop:
        raise CliError("--from must be below --to")
    count = int(math.floor((args.stop - args.start) / args.step + 1e-9)) + 1
    rows = []
    skipped = []
    for i in range(count):
        x = args.start + i * args.step
        if classify_domain(x).is_valid:
            rows.append((x, evaluate(x)))
        else:
            skipped.append(x)
    try:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("x_radians,f_value\n")
            for x, v in rows:
                fh.write(f"{x:.17g},{v:.17g}\n")
    except OSError as exc:
        raise CliError(f"cannot write {args.out!r}: {exc}")
    envelope = {
        "command": "samples",
        "inputs": {"from": args.start, "to": args.stop, "step": args.step,
                   "out": args.out},
        "status": "ok",
        "result": {"path": args.out, "rows": len(rows),
                   "skipped": [f"{x:.17g}" for x in skipped]},
    }
    return envelope, EXIT_OK


def _cmd_motivating(args) -> tuple[dict, int]:
    target = -3.0
    bound = 4.0 * math.pi
    family = solve_abs(target)
    solutions = family.enumerate_within(bound)
    checks = [{"x": _angle(x), "residual": evaluate(abs(x)) - target}
              for x in solutions]
    all_ok = all(abs(ch["residual"]) <= 1e-9 for ch in checks)
    phi = family.family.roots[0].phi
    envelope = {
        "command": "motivating",
        "inputs": {},
        "status": "ok" if all_ok else "error",
        "result": {
            "equation": ("sin|x| + cos|x| + tan|x| + cot|x| + sec|x| "
                         "+ csc|x| + 3 = 0"),
            "target": target,
            "phi": _angle(phi),
            "branch_forms": family.branch_forms(),
            "bound": bound,
            "solutions": checks,
            "smallest_positive": _angle(min(x for x in solutions if x > 0)),
            "all_verified_to_1e-9": all_ok,
        },
    }
    return envelope, EXIT_OK if all_ok else EXIT_ERROR


def _render_text(envelope: dict, out) -> None:
    print(f"command: {envelope['command']}", file=out)
    print(f"status:  {envelope['status']}", file=out)
    for key, value in envelope["inputs"].items():
        print(f"input {key} = {value}", file=out)
    for key, value in envelope["result"].items():
        print(f"{key}: {json.dumps(value)}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sixtrig",
                     description="Solve and verify sin x + cos x + tan x "
                                 "+ cot x + sec x + csc x = c.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p_solve = sub.add_parser("solve", help="closed-form solution family")
    p_solve.add_argument("--target", type=float, required=True)
    p_solve.add_argument("--integer-mode", action="store_true",
                         help="require an integer target and check the "
                              "integer case structure")
    p_solve.add_argument("--k-range", default="0..0", metavar="A..B")
    add_common(p_solve)
    p_solve.set_defaults(handler=_cmd_solve)

    p_verify = sub.add_parser("verify",
                              help="solve, then cross-check numerically")
    p_verify.add_argument("--target", type=float, required=True)
    p_verify.add_argument("--integer-mode", action="store_true")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_MATCH_TOL)
    p_verify.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p_verify.add_argument("--exclusion", type=float,
                          default=DEFAULT_EXCLUSION)
    add_common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan", help="grid scan of |F - c|")
    p_scan.add_argument("--target", type=float, required=True)
    p_scan.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p_scan.add_argument("--exclusion", type=float, default=DEFAULT_EXCLUSION)
    add_common(p_scan)
    p_scan.set_defaults(handler=_cmd_scan)

    p_classify = sub.add_parser("classify",
                                help="locate quadratic roots in an interval")
    for name in ("a", "b", "c", "lo", "hi"):
        p_classify.add_argument(name, type=float)
    p_classify.add_argument("--boundary-tol", type=float, default=1e-12)
    add_common(p_classify)
    p_classify.set_defaults(handler=_cmd_classify)

    p_samples = sub.add_parser("samples",
                               help="emit x,F(x) CSV over a grid")
    p_samples.add_argument("--from", dest="start", type=float, required=True)
    p_samples.add_argument("--to", dest="stop", type=float, required=True)
    p_samples.add_argument("--step", type=float, required=True)
    p_samples.add_argument("--out", required=True)
    add_common(p_samples)
    p_samples.set_defaults(handler=_cmd_samples)

    p_motivating = sub.add_parser("motivating",
                                  help="solve the absolute-value problem "
                                       "F(|x|) = -3 end to end")
    add_common(p_motivating)
    p_motivating.set_defaults(handler=_cmd_motivating)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    command = "(parse)"
    fmt = "json"
    try:
        args = parser.parse_args(argv)
        command = args.command
        fmt = args.format
        envelope, code = args.handler(args)
    except (CliError, ValueError) as exc:
        envelope = {"command": command, "inputs": {}, "status": "error",
                    "result": {"message": str(exc)}}
        code = EXIT_ERROR
    if fmt == "json":
        print(json.dumps(envelope, indent=2))
    else:
        _render_text(envelope, sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
