"""Command-line entry point: ``extremal <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails (or a solver does
not converge), 2 on bad input; every error is a single line on stderr.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io, svg
from .bodies import HPolytope, PointCloud
from .errors import ConvergenceError, DimensionError, DomainError
from .solvers import centered_maie, centered_mice, maie, mice, uniqueness_probe
from .theorems import SUITES, run_suite

PROG = "extremal"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p, eps=False, restarts=False, complex_flag=False, m=False):
    p.add_argument("--in", dest="inp", required=True, metavar="PATH", help="instance file")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, help=f"random seed (default: ${io.SEED_ENV} or 0)")
    if eps:
        p.add_argument("--eps", type=float, default=1e-6, help="MiCE duality-gap tolerance")
    if restarts:
        p.add_argument("--restarts", type=int, default=1, help="random restarts (>= 2 runs a uniqueness probe)")
    if complex_flag:
        p.add_argument("--complex", action="store_true", help="restrict to complex ellipsoids (R^2n read as C^n)")
    if m:
        p.add_argument("--m", type=int, default=64, help="number of unit scalars used to symmetrize")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Extremal ellipsoids over R^n and C^n.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    _add_common(sub.add_parser("solve-mice", help="minimal circumscribed ellipsoid of a cloud"), eps=True, restarts=True)
    _add_common(sub.add_parser("solve-maie", help="maximal inscribed ellipsoid of a polytope"), restarts=True, complex_flag=True)
    _add_common(sub.add_parser("solve-centered", help="origin-centered extremal ellipsoid"), eps=True, complex_flag=True, m=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of {', '.join([*SUITES, 'all'])}")
    v.add_argument("--trials", type=int, help="number of trials (suite-specific default)")
    v.add_argument("--seed", type=int)
    v.add_argument("--out", metavar="PATH")
    p = sub.add_parser("plot", help="SVG of a planar instance with its extremal ellipsoid(s)")
    _add_common(p, eps=True, restarts=True, complex_flag=True)
    p.add_argument("--project", nargs=2, type=int, metavar=("I", "J"), help="real coordinates to draw")
    p.add_argument("--bare", action="store_true", help="draw the instance only")
    return parser


# -- helpers ---------------------------------------------------------------------------

def _as_cloud(inst: io.Instance) -> PointCloud:
    if inst.kind == "points":
        return inst.body
    if inst.kind == "polytope":
        return PointCloud(inst.body.vertices())
    raise DomainError("a circumscribed ellipsoid needs a points or polytope instance")


def _as_polytope(inst: io.Instance) -> HPolytope:
    if inst.kind == "polytope":
        return inst.body
    if inst.kind == "points":
        P = inst.body.realified() if inst.body.field == "complex" else inst.body
        return HPolytope.from_points(P)
    raise DomainError("an inscribed ellipsoid needs a polytope or points instance")


def _probe_record(probe) -> dict:
    return {
        "restarts": probe.restarts,
        "lambda_spread": probe.lambda_spread,
        "shape_spread": probe.shape_spread,
        "center_spread": probe.center_spread,
        "center_axis_spread": probe.center_axis_spread,
        "semi_axes_range": [probe.radii.min(axis=0), probe.radii.max(axis=0)],
    }


def _instance_record(inst: io.Instance) -> dict:
    return {"name": inst.name, "kind": inst.kind, "field": inst.field}


def _solve_mice(args, seed):
    inst = io.read_instance(args.inp)
    P = _as_cloud(inst)
    if args.restarts >= 2:
        probe = uniqueness_probe(P, args.restarts, seed, eps=args.eps)
        return inst, probe.results, probe.reports, {"probe": _probe_record(probe)}
    E, u, rep = mice(P, eps=args.eps, seed=seed)
    return inst, [E], [rep], {"support": u.support()}


def _solve_maie(args, seed):
    inst = io.read_instance(args.inp)
    Q = _as_polytope(inst)
    if args.restarts >= 2:
        probe = uniqueness_probe(Q, args.restarts, seed, complex_constrained=args.complex)
        return inst, probe.results, probe.reports, {"probe": _probe_record(probe)}
    E, rep = maie(Q, complex_constrained=args.complex, seed=seed)
    return inst, [E], [rep], {}


def _solve_centered(args, seed):
    inst = io.read_instance(args.inp)
    if inst.kind == "points":
        E, _, rep = centered_mice(inst.body, m=args.m, eps=args.eps)
        rep.extra.pop("cloud", None)
    else:
        E, rep = centered_maie(_as_polytope(inst), m=args.m, complex_constrained=args.complex)
    return inst, [E], [rep], {}


SOLVERS = {"solve-mice": _solve_mice, "solve-maie": _solve_maie, "solve-centered": _solve_centered}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise io.InstanceError(f"cannot write {out}: {exc.strerror}") from None


def _run(args, argv) -> int:
    seed = io.resolve_seed(args.seed)
    if getattr(args, "restarts", 1) < 1:
        raise DomainError("--restarts must be positive")
    if getattr(args, "eps", 0.5) is not None and not 0 < getattr(args, "eps", 0.5) < 1:
        raise DomainError("--eps must lie in (0, 1)")
    if args.command in SOLVERS:
        inst, results, reports, extra = SOLVERS[args.command](args, seed)
        doc = {
            "command": list(argv), "seed": seed, "instance": _instance_record(inst),
            "ellipsoids": [io.ellipsoid_record(E) for E in results],
            "solve_reports": [io.solve_record(r) for r in reports],
        }
        doc.update(extra)
        doc["exit_status"] = 0
        _emit(io.dumps_report(doc), args.out)
        return 0
    if args.command == "verify":
        if args.trials is not None and args.trials < 1:
            raise DomainError("--trials must be positive")
        reports = run_suite(args.suite, args.trials, seed)
        status = 0 if all(r.passed for r in reports) else 1
        doc = {"command": list(argv), "seed": seed,
               "verification_reports": [io.verification_record(r) for r in reports], "exit_status": status}
        _emit(io.dumps_report(doc), args.out)
        for r in reports:
            print(r.summary(), file=sys.stderr)
        return status
    if args.command == "plot":
        inst = io.read_instance(args.inp)
        proj = tuple(args.project) if args.project else None
        svg._check_proj(inst.body, proj)
        ellipsoids = []
        if not args.bare and inst.kind != "ellipsoid":
            solver = _solve_maie if inst.kind == "polytope" else _solve_mice
            _, ellipsoids, _, _ = solver(args, seed)
        _emit(svg.render(inst.body, ellipsoids, proj, title=inst.name), args.out)
        return 0
    raise UsageError("missing subcommand")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand (solve-mice, solve-maie, solve-centered, verify, plot)")
        return _run(args, argv)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except (io.InstanceError, DimensionError, DomainError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
