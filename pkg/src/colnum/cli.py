"""Command-line frontend.

Subcommands: eval, exact, uniform, example21, verify.  Reports are JSON;
exit codes: 0 success, 1 bound/claim check failed, 2 input error,
3 resource cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import example21 as ex21
from . import uniform as uni
from . import verify as verify_mod
from .exact import (
    DEFAULT_CAP,
    CapExceededError,
    exact_min,
    treedepth_oracle,
    treewidth_oracle,
)
from .graph import (
    GraphError,
    parse_graph,
    parse_ordering,
    serialize_graph,
    serialize_ordering,
)
from .reach import INFINITY, KINDS, BudgetExceededError, reach_report
from .rng import make_rng

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class CliInputError(Exception):
    pass


def _parse_radius(tok: str):
    if tok in ("inf", "infinity"):
        return INFINITY
    try:
        r = int(tok)
    except ValueError:
        raise CliInputError(f"invalid radius {tok!r}") from None
    if r < 1:
        raise CliInputError(f"radius must be >= 1, got {r}")
    return r


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str):
    return parse_graph(_read(path))


def _emit(args, doc: dict) -> None:
    if not getattr(args, "no_timestamp", False):
        doc = {**doc, "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
    text = json.dumps(doc, indent=2 if getattr(args, "pretty", False) else None,
                      sort_keys=True)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _default_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("COLNUM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliInputError(f"COLNUM_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def cmd_eval(args) -> int:
    g = _load_graph(args.graph)
    sigma = parse_ordering(_read(args.ordering), g.n)
    radii = [_parse_radius(t) for t in args.r] or [1]
    kinds = args.kind or list(KINDS)
    reports = [
        reach_report(g, sigma, r, kind, budget=args.budget).to_json()
        for r in radii
        for kind in kinds
    ]
    _emit(args, {"command": "eval", "n": g.n, "m": g.m, "reports": reports})
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    cap = _default_cap(args)
    doc = {"command": "exact", "n": g.n, "m": g.m, "results": []}
    radii = [_parse_radius(t) for t in args.r]
    kinds = args.kind or ["strong"]
    for r in radii:
        for kind in kinds:
            doc["results"].append(exact_min(g, r, kind, cap=cap,
                                            budget=args.budget).to_json())
    if args.tw:
        doc["treewidth"] = treewidth_oracle(g, cap=cap)
    if args.td:
        doc["treedepth"] = treedepth_oracle(g, cap=cap)
    _emit(args, doc)
    return EXIT_OK


def _sigma_provider(name: str, cap: int):
    if name == "exact":
        return uni.exact_sigma_provider(cap)
    if name == "degeneracy":
        return uni.degeneracy_sigma_provider()
    raise CliInputError(f"unknown sigma provider {name!r}")


def cmd_uniform(args) -> int:
    cap = _default_cap(args)
    rng = make_rng(args.seed, 99) if args.tie_break == "random" else None
    if args.multi:
        pairs = []
        for spec_tok in args.multi:
            path, _, rtok = spec_tok.rpartition(":")
            if not path:
                raise CliInputError(
                    f"--multi expects FILE:R entries, got {spec_tok!r}")
            pairs.append((_load_graph(path), _parse_radius(rtok)))
        if len({g.n for g, _ in pairs}) != 1:
            raise CliInputError("--multi graphs must share one vertex set size")
        report = uni.uniform_multi(pairs, _sigma_provider(args.sigma, cap),
                                   args.tie_break, rng)
    elif args.dyadic:
        g = _load_graph(args.input)
        report = uni.uniform_single(g, _sigma_provider(args.sigma, cap),
                                    args.tie_break, rng)
    elif args.eps is not None:
        g = _load_graph(args.input)
        report = uni.uniform_single_eps(g, Fraction(args.eps),
                                        _sigma_provider(args.sigma, cap),
                                        args.tie_break, rng)
    else:
        if not args.input:
            raise CliInputError("uniform needs an instance file or a graph "
                                "with --dyadic/--eps/--multi")
        instance = uni.load_instance(_read(args.input), cap=cap)
        report = uni.run_instance(instance, args.tie_break, rng)
        audit = uni.audit_partition(instance, report.sigma_star) if args.audit else None
        doc = report.to_json(audit)
        doc["command"] = "uniform"
        if args.sigma_out:
            with open(args.sigma_out, "w", encoding="utf-8") as fh:
                fh.write(serialize_ordering(report.sigma_star))
        _emit(args, doc)
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED
    doc = report.to_json()
    doc["command"] = "uniform"
    if args.sigma_out:
        with open(args.sigma_out, "w", encoding="utf-8") as fh:
            fh.write(serialize_ordering(report.sigma_star))
    _emit(args, doc)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_example21(args) -> int:
    try:
        params = ex21.Example21Params(args.t, args.n, args.r, args.r_prime)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    ex = ex21.build_example21(params)
    prefix = args.out_prefix
    with open(f"{prefix}.g", "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(ex.graph))
    with open(f"{prefix}.labels.json", "w", encoding="utf-8") as fh:
        json.dump(ex.labels, fh, sort_keys=True)
        fh.write("\n")
    doc = {
        "command": "example21",
        "params": [args.t, args.n, args.r, args.r_prime],
        "vertices": ex.graph.n,
        "edges": ex.graph.m,
        "graph_file": f"{prefix}.g",
        "labels_file": f"{prefix}.labels.json",
    }
    ok = True
    if args.verify:
        facts = ex21.verify_facts(ex)
        claims = ex21.verify_claims(ex, args.samples, make_rng(args.seed, 8))
        doc["facts"] = facts
        doc["claims"] = claims
        ok = facts["ok"] and claims["ok"]
        doc["ok"] = ok
    _emit(args, doc)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    suites = args.suite if args.suite else ["all"]
    try:
        report = verify_mod.run_battery(args.seed, suites)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    report["command"] = "verify"
    _emit(args, report)
    if not getattr(args, "quiet", False):
        for c in report["criteria"]:
            status = "PASS" if c["ok"] else "FAIL"
            print(f"criterion {c['id']:>2} {c['name']:<20} {status}",
                  file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colnum",
        description="Generalized coloring numbers: evaluation, exact "
                    "search, uniform orderings, counterexamples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report to a file")
        p.add_argument("--pretty", action="store_true", help="indent JSON")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp field")

    p = sub.add_parser("eval", help="evaluate reach reports for a fixed ordering")
    p.add_argument("graph")
    p.add_argument("ordering")
    p.add_argument("--r", action="append", default=[],
                   help="radius (repeatable; integer or 'inf')")
    p.add_argument("--kind", action="append", choices=list(KINDS))
    p.add_argument("--budget", type=int, default=100_000)
    common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("exact", help="optimal values over all orderings")
    p.add_argument("graph")
    p.add_argument("--r", action="append", default=[])
    p.add_argument("--kind", action="append", choices=list(KINDS))
    p.add_argument("--tw", action="store_true", help="treewidth oracle")
    p.add_argument("--td", action="store_true", help="treedepth oracle")
    p.add_argument("--cap", type=int, default=None,
                   help="exact-search vertex cap (env COLNUM_CAP)")
    p.add_argument("--budget", type=int, default=100_000)
    common(p)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("uniform", help="uniform ordering via the collecting algorithm")
    p.add_argument("input", nargs="?",
                   help="instance JSON, or a graph file with --dyadic/--eps")
    p.add_argument("--dyadic", action="store_true",
                   help="dyadic weights, k = floor(log2(n-2))")
    p.add_argument("--eps", help="geometric weights with this epsilon (rational)")
    p.add_argument("--multi", nargs="+", metavar="FILE:R",
                   help="unit-weight layers from graph files")
    p.add_argument("--sigma", choices=["exact", "degeneracy"],
                   default="degeneracy", help="per-layer ordering source")
    p.add_argument("--sigma-out", help="write sigma* as an ordering file")
    p.add_argument("--tie-break", choices=["deterministic", "random"],
                   default="deterministic")
    p.add_argument("--audit", action="store_true",
                   help="include the witnessing-path partition audit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_uniform)

    p = sub.add_parser("example21", help="generate the counterexample family")
    p.add_argument("t", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("r_prime", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", default="example21")
    common(p)
    p.set_defaults(fn=cmd_example21)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("suite", nargs="*",
                   help=f"suites: {', '.join(verify_mod.SUITES)}, all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, CliInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CapExceededError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
