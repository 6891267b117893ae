"""Command line interface.

Verbs: analyze one element, print orbit tables, draw samples from the
distinguished families, run verification suites.  Exit codes: 0 success,
1 verification/analysis failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .liealg import make_algebra
from .docio import (parse_matrix_doc, emit_matrix_doc, DocumentError,
                    analysis_report, analysis_text)
from .korbits import (enumerate_orbits, orbit_graph, orbit_graph_text,
                      orbit_by_name, sample_yq, sample_xi, sample_nilfibre,
                      sample_g0, sample_chain_disjoint, xi_slot_count)
from .rand import Sampler
from .suites import SuiteConfig, SUITE_NAMES, run_suite, run_all


def _fail_usage(msg):
    print("error: %s" % msg, file=sys.stderr)
    return 2


def cmd_analyze(args):
    try:
        with open(args.input) as fh:
            doc = json.load(fh)
    except OSError as exc:
        return _fail_usage("cannot read %s: %s" % (args.input, exc))
    except json.JSONDecodeError as exc:
        return _fail_usage("invalid JSON in %s: %s" % (args.input, exc))
    try:
        ctx, mat = parse_matrix_doc(doc)
    except DocumentError as exc:
        return _fail_usage(str(exc))
    report = analysis_report(ctx, mat)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(analysis_text(report))
    return 0


def cmd_orbits(args):
    if args.kind != "so":
        return _fail_usage("orbit tables are defined for --kind so")
    if args.n < 3:
        return _fail_usage("orbit tables need n >= 3")
    ctx = make_algebra("so", args.n)
    graph = orbit_graph(ctx)
    if args.format == "json" or args.json:
        print(json.dumps(graph, indent=2))
    else:
        print(orbit_graph_text(graph))
    return 0


def cmd_sample(args):
    try:
        ctx = make_algebra(args.kind, args.n)
    except ValueError as exc:
        return _fail_usage(str(exc))
    s = Sampler(args.seed)
    try:
        if args.what == "yq":
            if not args.orbit:
                return _fail_usage("--what yq needs --orbit")
            orbit = orbit_by_name(ctx, args.orbit)
            mat = sample_yq(ctx, orbit, s)
        elif args.what == "xi":
            pat = args.pattern or ""
            mat = sample_xi(ctx, len(pat), pat, s)
        elif args.what == "nilfibre":
            mat = sample_nilfibre(ctx, s, args.component)
        elif args.what == "g0":
            mat = sample_g0(ctx, s)
        else:
            mat = sample_chain_disjoint(ctx, s)
    except (KeyError, ValueError) as exc:
        return _fail_usage(str(exc))
    print(json.dumps(emit_matrix_doc(ctx, mat), indent=2))
    return 0


def cmd_verify(args):
    cfg = SuiteConfig(args.suite, args.trials, args.seed,
                      args.n_min, args.n_max)
    try:
        reports = (run_all(cfg) if args.suite == "all"
                   else [run_suite(cfg)])
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print("\n".join(r.summary_lines()))
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="gzlie",
        description="Exact chain-restriction invariants, regularity tests "
                    "and K-orbit tables for gl(n) and so(n) over Q(i).")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one element from a matrix "
                                        "document")
    pa.add_argument("--input", required=True, help="path to a JSON matrix "
                                                   "document")
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    po = sub.add_parser("orbits", help="K-orbit table and monoid graph")
    po.add_argument("--kind", default="so", choices=["so", "gl"])
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--format", default="text", choices=["text", "json"])
    po.add_argument("--json", action="store_true")
    po.set_defaults(func=cmd_orbits)

    ps = sub.add_parser("sample", help="draw an element from a "
                                       "distinguished family")
    ps.add_argument("--what", required=True,
                    choices=["yq", "xi", "nilfibre", "g0", "chain"])
    ps.add_argument("--kind", default="so", choices=["so", "gl"])
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--orbit", help="orbit name for --what yq, e.g. Q1")
    ps.add_argument("--pattern", help="U/L string for --what xi")
    ps.add_argument("--component", type=int, default=0,
                    help="nilfibre component index")
    ps.add_argument("--seed", type=int, default=0)
    ps.set_defaults(func=cmd_sample)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True,
                    choices=SUITE_NAMES + ["all"])
    pv.add_argument("--trials", type=int, default=0,
                    help="trials per claim (0 = suite default)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--n-min", type=int, default=0)
    pv.add_argument("--n-max", type=int, default=0)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
