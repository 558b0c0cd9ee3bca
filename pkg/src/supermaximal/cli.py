"""Command line front end.

Exit status is 0 on success, 1 on bad input and 2 when a mathematical
property check fails (a Milnor-Wood violation, a hyperbolic simple closed
curve, ...). Reports are JSON on stdout; errors are JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional


from . import construct, curves, rep as rep_mod, symplectic
from .errors import SupermaximalError
from .io import dumps, parse_angles, read_rep, render_angle, sig, write_rep
from .tolerance import Tolerances

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class InputError(Exception):
    code = "input_error"


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        print(dumps({"error": "usage", "message": message}), file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _global_options(parser, suppress=False):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(0))
    parser.add_argument("--tol-class", type=float, default=default(None), help="trace band around 2")
    parser.add_argument("--tol-relation", type=float, default=default(None), help="relation residual")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supermaximal", description=__doc__.split("\n")[0])
    _global_options(parser)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-necklace", parents=[common], help="glue a super-maximal rep from action-angle data")
    p.add_argument("--alpha", required=True)
    p.add_argument("--x", default="")
    p.add_argument("--twist", default="")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("sample", parents=[common], help="random rep in a super-maximal component")
    p.add_argument("--alpha", required=True)
    p.add_argument("-o", "--output", required=True)

    for name, text in (("euler", "relative Euler class"), ("mw-check", "refined Milnor-Wood check")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")

    p = sub.add_parser("fuzz-mw", parents=[common], help="Milnor-Wood and mirror fuzzing on random reps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)

    p = sub.add_parser("audit-curves", parents=[common], help="search for hyperbolic simple closed curves")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=20)
    p.add_argument("--samples", type=int, default=1000)

    p = sub.add_parser("polytope", parents=[common], help="moment polytope of a super-maximal component")
    p.add_argument("--alpha", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--vertices", action="store_true")
    g.add_argument("--volume", action="store_true")
    g.add_argument("--json", action="store_true")

    p = sub.add_parser("moment", parents=[common], help="moment map of a rep")
    p.add_argument("file")

    p = sub.add_parser("flow", parents=[common], help="twist flow along a pants curve")
    p.add_argument("file")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("-o", "--output", required=True)
    return parser


def _tolerances(args) -> Tolerances:
    kw = {}
    if args.tol_class is not None:
        kw["classify"] = args.tol_class
    if args.tol_relation is not None:
        kw["relation"] = args.tol_relation
    return Tolerances(**kw)


def _existing(path: str) -> str:
    if not Path(path).is_file():
        raise InputError(f"no such file: {path}")
    return path


def _writable(path: str) -> str:
    parent = Path(path).resolve().parent
    if not parent.is_dir():
        raise InputError(f"output directory does not exist: {parent}")
    return path


def _rep_summary(r, tol) -> dict:
    report = rep_mod.euler_report(r, tol)
    return {
        "n": r.n,
        "euler": report.euler,
        "super_maximal": report.super_maximal,
        "theta": [render_angle(t) for t in report.theta_vector],
    }


def _cmd_build_necklace(args, tol):
    _writable(args.output)
    coords = construct.ActionAngleCoords(parse_angles(args.alpha), parse_angles(args.x), parse_angles(args.twist))
    r = construct.necklace(coords)
    write_rep(r, args.output)
    return EXIT_OK, {"output": args.output, **_rep_summary(r, tol)}


def _cmd_sample(args, tol):
    _writable(args.output)
    coords = construct.sample_coords(parse_angles(args.alpha), args.seed)
    r = construct.necklace(coords)
    write_rep(r, args.output)
    return EXIT_OK, {
        "output": args.output,
        "seed": args.seed,
        "x": [render_angle(v) for v in coords.x],
        "twist": [sig(v) for v in coords.t],
        **_rep_summary(r, tol),
    }


def _euler_payload(report: rep_mod.EulerReport) -> dict:
    return {
        "euler": report.euler,
        "super_maximal": report.super_maximal,
        "theta": [render_angle(t) for t in report.theta_vector],
        "big_theta": render_angle(report.big_theta),
        "volume": render_angle(report.volume),
        "mw_lower": report.mw_lower,
        "mw_upper": report.mw_upper,
        "l": report.l,
    }


def _cmd_euler(args, tol):
    r = read_rep(_existing(args.file), tol)
    return EXIT_OK, _euler_payload(rep_mod.euler_report(r, tol))


def _cmd_mw_check(args, tol):
    r = read_rep(_existing(args.file), tol)
    report = rep_mod.euler_report(r, tol)
    ok = report.mw_lower <= report.euler <= report.mw_upper
    return (EXIT_OK if ok else EXIT_VIOLATION), {"ok": ok, **_euler_payload(report)}


def _cmd_fuzz(args, tol):
    if args.n < 3 or args.trials < 0:
        raise InputError("need --n >= 3 and --trials >= 0")
    report = rep_mod.fuzz_milnor_wood(args.n, args.trials, args.seed, tol)
    return (EXIT_OK if report.ok else EXIT_VIOLATION), report.to_json()


def _cmd_audit(args, tol):
    r = read_rep(_existing(args.file), tol)
    report = curves.audit_non_hyperbolic(r, args.depth, args.samples, args.seed)
    payload = report.to_json()
    payload["max_abs_trace"] = sig(payload["max_abs_trace"])
    return (EXIT_OK if report.ok else EXIT_VIOLATION), payload


def _cmd_polytope(args, tol):
    alpha = parse_angles(args.alpha)
    P = symplectic.delzant_polytope(alpha)
    euclid = symplectic.polytope_volume(P)
    symp = symplectic.symplectic_volume(alpha)
    volumes = {
        "euclidean": render_angle(euclid),
        "symplectic": {"value": sig(symp), "pi_power": 2 * P.dim, "coefficient": sig(symp / math.pi ** (2 * P.dim))},
    }
    if args.vertices:
        return EXIT_OK, {"vertices": [[render_angle(v) for v in row] for row in P.vertices]}
    if args.volume:
        return EXIT_OK, volumes
    payload = P.to_json()
    payload["lambda"] = render_angle(P.lam)
    payload["volume"] = volumes
    return EXIT_OK, payload


def _cmd_moment(args, tol):
    r = read_rep(_existing(args.file), tol)
    beta = symplectic.moment_map(r, tol)
    payload = {"beta": [render_angle(b) for b in beta]}
    try:
        alpha = rep_mod.theta_vector(r, tol)
        P = symplectic.delzant_polytope(alpha)
        payload["min_slack"] = sig(float(P.slack(beta).min())) if beta.size else None
    except SupermaximalError:
        payload["min_slack"] = None
    return EXIT_OK, payload


def _cmd_flow(args, tol):
    _writable(args.output)
    r = read_rep(_existing(args.file), tol)
    if not 1 <= args.index <= r.n - 3:
        raise InputError(f"--index must lie in 1..{r.n - 3}")
    out = symplectic.twist_flow(r, args.index, args.t, tol)
    write_rep(out, args.output)
    return EXIT_OK, {"output": args.output, "index": args.index, "t": args.t, **_rep_summary(out, tol)}


COMMANDS = {
    "build-necklace": _cmd_build_necklace,
    "sample": _cmd_sample,
    "euler": _cmd_euler,
    "mw-check": _cmd_mw_check,
    "fuzz-mw": _cmd_fuzz,
    "audit-curves": _cmd_audit,
    "polytope": _cmd_polytope,
    "moment": _cmd_moment,
    "flow": _cmd_flow,
}


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        tol = _tolerances(args)
        status, payload = COMMANDS[args.command](args, tol)
    except (SupermaximalError, InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        code = getattr(exc, "code", "invalid_input")
        print(dumps({"error": code, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    print(dumps(payload), file=out)
    return status


def main():
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    raise SystemExit(run())


if __name__ == "__main__":
    main()
