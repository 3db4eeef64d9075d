"""Command-line interface: ``domcx <group> <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .classes import enumerate_classes
from .complexes import ComplexBall, ComplexError, Unreachable, build_ball, distance_upper, \
    path_from_json, vertex_from_json
from .domains import domain_from_json, domains_disjoint, enumerate_domains
from .maps import project_path_to_curves, rectify_genus0_path, rule_named, wrap_construction
from .surface import SurfaceError, build_surface, complexity


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _emit(obj, out=None):
    text = json.dumps(obj, indent=1, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _surface(args):
    return build_surface(args.genus, args.boundary)


def _add_surface(p, required=True):
    p.add_argument("--genus", "-g", type=int, required=required, default=0)
    p.add_argument("--boundary", "-b", type=int, required=required, default=5)


# ------------------------------------------------------------------ commands


def cmd_surface_info(args):
    s = _surface(args)
    if args.json:
        _emit(s.to_json(), args.out)
        return 0
    print(f"{s.name}: chi={s.euler_characteristic} complexity={complexity(s)} "
          f"triangles={s.n_triangles} edges={s.n_edges}")
    for t, w in enumerate(s.words):
        print(f"  triangle {t}: {list(w)}  corners {list(s.corner_label[t])}")
    return 0


def cmd_classes_enumerate(args):
    s = _surface(args)
    found = enumerate_classes(args.kind, s, args.norm)
    _emit({"surface": [s.genus, s.boundary_count], "norm": args.norm, "kind": args.kind,
           "count": len(found), "classes": [c.to_json() for c in found]}, args.out)
    return 0


def cmd_domains_enumerate(args):
    s = _surface(args)
    found = enumerate_domains(s, args.norm, args.max_curves)
    if args.peripheral:
        found = [X for X in found if X.is_peripheral_pants]
    _emit({"surface": [s.genus, s.boundary_count], "norm": args.norm,
           "count": len(found), "domains": [X.to_json() for X in found]}, args.out)
    return 0


def cmd_domains_disjoint(args):
    s = _surface(args)
    X, Y = domain_from_json(s, _load(args.a)), domain_from_json(s, _load(args.b))
    print(json.dumps({"disjoint": domains_disjoint(X, Y)}))
    return 0


def cmd_ball_build(args):
    s = _surface(args)
    ball = build_ball(args.kind, s, norm=args.norm, arc_norm=args.arc_norm,
                      max_boundary_curves=args.max_curves)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(ball.to_dot())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(ball.dumps())
    print(f"{ball.kind} ball on {s.name}: {len(ball)} vertices, {ball.n_edges} edges, "
          f"{len(ball.components())} component(s)")
    return 0


def cmd_ball_distance(args):
    ball = ComplexBall.from_json(_load(args.ball))
    u = vertex_from_json(ball.surface, _load(args.u))
    v = vertex_from_json(ball.surface, _load(args.v))
    try:
        d, w = distance_upper(ball, u, v)
    except Unreachable:
        print(json.dumps({"distance_upper": None}))
        return 0
    _emit({"distance_upper": d, "witness": w.to_json()}, args.out)
    return 0


def cmd_map_project_path(args):
    s = _surface(args)
    p = path_from_json(s, _load(args.path))
    _emit(project_path_to_curves(p, rule_named(args.rule)).to_json(), args.out)
    return 0


def cmd_map_rectify(args):
    s = _surface(args)
    p = path_from_json(s, _load(args.path))
    _emit(rectify_genus0_path(p, rule_named(args.rule)).to_json(), args.out)
    return 0


def cmd_map_wrap(args):
    s = _surface(args)
    c, B, C = wrap_construction(s)
    _emit({"curve": c.to_json(), "B": B.to_json(), "C": C.to_json()}, args.out)
    return 0


def cmd_check_run(args):
    try:
        surfaces = tuple(tuple(int(x) for x in t.split(",")) for t in args.surface) \
            if args.surface else checks.DEFAULT_SURFACES
        ids = tuple(x.strip().upper() for x in args.checks.split(",")) if args.checks \
            else checks.CHECK_IDS
        overrides = {}
        if args.paths:
            overrides = {c: {"paths": args.paths} for c in ("T1", "T4", "T6")}
        cfg = checks.SuiteConfig(surfaces, ids, args.norm, args.seed, overrides).validate()
    except (ValueError, checks.ConfigError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    reports = checks.run_suite(cfg, progress=None if args.quiet else lambda r: print(r.summary(), flush=True))
    if args.out:
        checks.dump_reports(reports, args.out)
    n_fail = sum(r.verdict == "fail" for r in reports)
    if not args.quiet:
        print(f"{len(reports)} report(s), {n_fail} failing")
    return checks.exit_code(reports)


# ------------------------------------------------------------------ parser


def build_parser():
    ap = argparse.ArgumentParser(prog="domcx", description=__doc__)
    groups = ap.add_subparsers(dest="group", required=True)

    g = groups.add_parser("surface").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("info")
    _add_surface(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_surface_info)

    g = groups.add_parser("classes").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("enumerate")
    _add_surface(p, required=False)
    p.add_argument("--kind", choices=("curve", "arc"), default="curve")
    p.add_argument("--norm", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classes_enumerate)

    g = groups.add_parser("domains").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("enumerate")
    _add_surface(p, required=False)
    p.add_argument("--norm", type=int, default=8)
    p.add_argument("--max-curves", type=int)
    p.add_argument("--peripheral", action="store_true", help="peripheral pants only")
    p.add_argument("--out")
    p.set_defaults(func=cmd_domains_enumerate)
    p = g.add_parser("disjoint")
    _add_surface(p, required=False)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_domains_disjoint)

    g = groups.add_parser("ball").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("build")
    _add_surface(p, required=False)
    p.add_argument("--kind", default="D")
    p.add_argument("--norm", type=int, default=8)
    p.add_argument("--arc-norm", type=int)
    p.add_argument("--max-curves", type=int)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_ball_build)
    p = g.add_parser("distance")
    p.add_argument("--ball", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ball_distance)

    g = groups.add_parser("map").add_subparsers(dest="cmd", required=True)
    for name, fn in (("project-path", cmd_map_project_path), ("rectify", cmd_map_rectify)):
        p = g.add_parser(name)
        _add_surface(p, required=False)
        p.add_argument("--path", required=True)
        p.add_argument("--rule", default="canonical-min")
        p.add_argument("--out")
        p.set_defaults(func=fn)
    p = g.add_parser("wrap")
    _add_surface(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_map_wrap)

    g = groups.add_parser("check").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("run")
    p.add_argument("--surface", action="append", help="G,B; repeatable")
    p.add_argument("--checks", help="comma separated, e.g. T1,T3,ORACLE")
    p.add_argument("--norm", type=int)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--paths", type=int, help="override sampled path counts")
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_check_run)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SurfaceError, ComplexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
