"""Acceptance battery: every inequality the package claims, checked at desk
scale against independent oracles.

Each criterion function is pure given its seed and returns a JSON-ready
dict with an "ok" flag; `run_battery` assembles the full report.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from .example21 import Example21Params, build_example21, verify_claims, verify_facts
from .exact import degeneracy_ordering, exact_min, treedepth_oracle, treewidth_oracle
from .graph import Graph
from .oracle import reach_sets_by_paths
from .reach import (
    ADM,
    INFINITY,
    STRONG,
    WEAK,
    adm_of_ordering,
    scol_of_ordering,
    strongly_reachable_set,
    wcol_of_ordering,
    weakly_reachable_set,
)
from .rng import make_rng, random_ordering, random_sparse_graph
from .uniform import (
    Layer,
    UniformInstance,
    build_reachability_graph,
    claim4_check,
    collect_ordering,
    degeneracy_sigma_provider,
    exact_sigma_provider,
    layer_wcol,
    uniform_multi,
    uniform_single,
    uniform_single_eps,
    verify_thm41_bound,
)

_ATLAS_CACHE: dict = {}


def atlas_graphs(max_n: int, connected_only: bool = False) -> list[Graph]:
    """All graphs with 1 <= n <= max_n up to isomorphism (max_n <= 7)."""
    key = (max_n, connected_only)
    if key not in _ATLAS_CACHE:
        out = []
        for nxg in nx.graph_atlas_g():
            n = nxg.number_of_nodes()
            if n == 0 or n > max_n:
                continue
            if connected_only and not nx.is_connected(nxg):
                continue
            out.append(Graph(n, list(nxg.edges())))
        _ATLAS_CACHE[key] = out
    return _ATLAS_CACHE[key]


def _result(cid, name, ok, **details):
    return {"id": cid, "name": name, "ok": bool(ok), **details}


def criterion_oracle_equivalence(seed: int) -> dict:
    """C1: BFS-based W_r / S_r match the all-simple-paths oracle."""
    rng = make_rng(seed, 1)
    radii = (1, 2, 3, INFINITY)
    graphs = atlas_graphs(6)
    mismatches = 0
    checked = 0
    for g in graphs:
        for _ in range(5):
            sigma = random_ordering(rng, g.n)
            for r in radii:
                for x in range(g.n):
                    w_ref, s_ref = reach_sets_by_paths(g, sigma, x, r)
                    checked += 1
                    if weakly_reachable_set(g, sigma, x, r) != w_ref:
                        mismatches += 1
                    if strongly_reachable_set(g, sigma, x, r) != s_ref:
                        mismatches += 1
    return _result(1, "oracle-equivalence", mismatches == 0,
                   graphs=len(graphs), checks=checked, mismatches=mismatches)


def criterion_sandwich(seed: int) -> dict:
    """C2: adm_r <= scol_r <= wcol_r <= scol_r^r, per ordering and at graph
    level via exact search."""
    rng = make_rng(seed, 2)
    radii = (1, 2, 3)
    graphs = atlas_graphs(6)
    violations = 0
    for g in graphs:
        for _ in range(5):
            sigma = random_ordering(rng, g.n)
            for r in radii:
                a = adm_of_ordering(g, sigma, r).value
                s = scol_of_ordering(g, sigma, r).value
                w = wcol_of_ordering(g, sigma, r).value
                if not (a <= s <= w <= s**r):
                    violations += 1
        for r in radii:
            s = exact_min(g, r, STRONG).value
            w = exact_min(g, r, WEAK).value
            if not (s <= w <= s**r):
                violations += 1
    return _result(2, "sandwich-eq1", violations == 0,
                   graphs=len(graphs), violations=violations)


def criterion_prop11(seed: int, sample_size: int = 200) -> dict:
    """C3: exact scol_inf = treewidth + 1 and exact wcol_inf = treedepth,
    against independent oracles, on a seeded sample of connected graphs
    with n <= 7 (all graphs with n <= 5 are always included)."""
    rng = make_rng(seed, 3)
    small = [g for g in atlas_graphs(5, connected_only=True)]
    bigger = [g for g in atlas_graphs(7, connected_only=True) if g.n > 5]
    extra = max(0, sample_size - len(small))
    idx = sorted(int(i) for i in rng.choice(len(bigger), size=min(extra, len(bigger)), replace=False))
    corpus = small + [bigger[i] for i in idx]
    failures = 0
    for g in corpus:
        tw = treewidth_oracle(g)
        td = treedepth_oracle(g)
        if exact_min(g, INFINITY, STRONG).value != tw + 1:
            failures += 1
        if exact_min(g, INFINITY, WEAK).value != td:
            failures += 1
    return _result(3, "prop11-tw-td", failures == 0,
                   graphs=len(corpus), failures=failures)


def _random_thm41_instance(rng, max_n=30, exact_cap=9):
    n = int(rng.integers(4, max_n + 1))
    k = int(rng.integers(1, 4))
    layers = []
    for _ in range(k):
        g = random_sparse_graph(rng, n)
        r = int(rng.integers(1, 4))
        a = int(rng.integers(1, 5))
        layers.append(Layer(g, r, a, degeneracy_ordering(g)))
    return UniformInstance(n, tuple(layers))


def _with_exact_sigmas(instance, cap):
    provider = exact_sigma_provider(cap)
    layers = tuple(
        Layer(l.graph, l.r, l.a, provider(l.graph, 2 * l.r))
        for l in instance.layers
    )
    return UniformInstance(instance.n, layers)


def criterion_thm41(seed: int, count: int = 500) -> dict:
    """C4 + C10: the collecting algorithm's bound, Claim 4 per reachability
    graph, the Claim 5 runtime invariant, and the structural loop
    invariants, over seeded random instances and both tie-break policies."""
    rng = make_rng(seed, 4)
    bound_failures = 0
    claim4_failures = 0
    structure_failures = 0
    runs = 0
    for idx in range(count):
        instance = _random_thm41_instance(rng)
        variants = [instance]
        if instance.n <= 9:
            variants.append(_with_exact_sigmas(instance, cap=9))
        for inst in variants:
            hs = [build_reachability_graph(l.graph, l.sigma, l.r)
                  for l in inst.layers]
            ws = [layer_wcol(l) for l in inst.layers]
            for layer, h in zip(inst.layers, hs):
                if not claim4_check(h, layer.sigma, layer.graph, layer.r)["ok"]:
                    claim4_failures += 1
            for tie_break in ("deterministic", "random"):
                tb_rng = make_rng(seed, 4, idx) if tie_break == "random" else None
                trace = collect_ordering(inst, tie_break, tb_rng, hs=hs, ws=ws)
                runs += 1
                checks = verify_thm41_bound(inst, trace.sigma_star, ws=ws)
                bound_failures += sum(1 for c in checks if not c.ok)
                if trace.rounds != inst.A * inst.n:
                    structure_failures += 1
                if any(p != inst.A for p in trace.processed_counts):
                    structure_failures += 1
    c4 = _result(4, "thm41-bound", bound_failures == 0 and claim4_failures == 0,
                 instances=count, runs=runs,
                 bound_failures=bound_failures,
                 claim4_failures=claim4_failures)
    c10 = _result(10, "collect-structure", structure_failures == 0,
                  runs=runs, failures=structure_failures)
    return {"c4": c4, "c10": c10}


def criterion_thm13(seed: int, count: int = 100) -> dict:
    """C5: dyadic uniform ordering with exact witness orderings:
    scol_r(G, sigma*) <= (2^r + 1) * wcol_2r(G)^2 for r in [1, k]."""
    rng = make_rng(seed, 5)
    failures = 0
    layer_checks = 0
    for _ in range(count):
        n = int(rng.integers(4, 13))
        g = random_sparse_graph(rng, n)
        report = uniform_single(g, exact_sigma_provider(cap=12))
        layer_checks += len(report.checks)
        failures += sum(1 for c in report.checks if not c.ok)
    return _result(5, "thm13-dyadic", failures == 0,
                   graphs=count, layer_checks=layer_checks, failures=failures)


def criterion_thm15(seed: int, count: int = 100) -> dict:
    """C6: multi-graph instances with unit weights:
    scol_{r_i}(G_i, sigma*) <= (k+1) * w_i^2 per layer."""
    rng = make_rng(seed, 6)
    failures = 0
    layer_checks = 0
    for _ in range(count):
        n = int(rng.integers(4, 13))
        k = int(rng.integers(1, 4))
        pairs = [
            (random_sparse_graph(rng, n), int(rng.integers(1, 4)))
            for _ in range(k)
        ]
        report = uniform_multi(pairs, degeneracy_sigma_provider())
        layer_checks += len(report.checks)
        failures += sum(1 for c in report.checks if not c.ok)
    return _result(6, "thm15-multi", failures == 0,
                   instances=count, layer_checks=layer_checks, failures=failures)


def criterion_cor43(seed: int, count: int = 50) -> dict:
    """C7: geometric weights for eps in {1/2, 1, 2}:
    scol_i(G, sigma*) <= ((1+eps)^(i+1)/eps^2 + 1) * w_i^2, with the
    internal estimate A < (1+eps)^(k+1)/eps."""
    rng = make_rng(seed, 7)
    failures = 0
    errors = 0
    layer_checks = 0
    eps_values = (Fraction(1, 2), Fraction(1), Fraction(2))
    for _ in range(count):
        n = int(rng.integers(4, 13))
        g = random_sparse_graph(rng, n)
        for eps in eps_values:
            try:
                report = uniform_single_eps(g, eps, degeneracy_sigma_provider())
            except AssertionError:
                errors += 1
                continue
            layer_checks += len(report.checks)
            failures += sum(1 for c in report.checks if not c.ok)
    return _result(7, "cor43-eps", failures == 0 and errors == 0,
                   graphs=count, layer_checks=layer_checks,
                   failures=failures, assertion_errors=errors)


def criterion_example21(seed: int, samples: int = 100) -> dict:
    """C8: counterexample family facts E1-E3 and Claims 1-3."""
    param_sets = ((4, 4, 2, 4), (4, 8, 2, 4), (4, 6, 1, 3))
    entries = []
    ok = True
    for i, (t, n, r, rp) in enumerate(param_sets):
        ex = build_example21(Example21Params(t, n, r, rp))
        facts = verify_facts(ex)
        claims = verify_claims(ex, samples, make_rng(seed, 8, i))
        good = facts["ok"] and claims["ok"]
        ok = ok and good
        entries.append({
            "params": [t, n, r, rp],
            "vertices": ex.graph.n,
            "facts": facts,
            "claims": claims,
            "ok": good,
        })
    return _result(8, "example21", ok, instances=entries)


SUITES = {
    "oracle": ("criterion 1", criterion_oracle_equivalence),
    "sandwich": ("criterion 2", criterion_sandwich),
    "prop11": ("criterion 3", criterion_prop11),
    "thm41": ("criteria 4 and 10", criterion_thm41),
    "thm13": ("criterion 5", criterion_thm13),
    "thm15": ("criterion 6", criterion_thm15),
    "cor43": ("criterion 7", criterion_cor43),
    "example21": ("criterion 8", criterion_example21),
}


def run_battery(seed: int, suites=None) -> dict:
    """Run the named suites (default: all) and aggregate pass/fail."""
    names = list(SUITES) if suites in (None, ["all"], ("all",)) else list(suites)
    criteria = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r} "
                             f"(known: {', '.join(SUITES)}, all)")
        _, fn = SUITES[name]
        out = fn(seed)
        if name == "thm41":
            criteria.append(out["c4"])
            criteria.append(out["c10"])
        else:
            criteria.append(out)
    criteria.sort(key=lambda c: c["id"])
    return {
        "seed": seed,
        "suites": names,
        "criteria": criteria,
        "ok": all(c["ok"] for c in criteria),
    }
