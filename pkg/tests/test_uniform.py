from fractions import Fraction

import pytest

from colnum.exact import degeneracy_ordering
from colnum.graph import Graph, Ordering
from colnum.rng import make_rng, random_sparse_graph
from colnum.uniform import (
    Layer,
    UniformInstance,
    audit_partition,
    build_reachability_graph,
    claim4_check,
    collect_ordering,
    degeneracy_sigma_provider,
    eps_schedule,
    exact_sigma_provider,
    layer_wcol,
    load_instance,
    run_instance,
    uniform_multi,
    uniform_single,
    uniform_single_eps,
    verify_thm41_bound,
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def one_layer(g, r=1, a=1):
    return UniformInstance(g.n, (Layer(g, r, a, degeneracy_ordering(g)),))


def test_reachability_graph_p3():
    p3 = path(3)
    nat = Ordering.identity(3)
    assert build_reachability_graph(p3, nat, 1) == p3
    h2 = build_reachability_graph(p3, nat, 2)
    assert h2.edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_claim4_frozen_example():
    p3 = path(3)
    nat = Ordering.identity(3)
    h1 = build_reachability_graph(p3, nat, 1)
    check = claim4_check(h1, nat, p3, 1)
    assert check["ok"] and check["scol2_h"] == 2 and check["wcol_2r_g"] == 3
    h2 = build_reachability_graph(p3, nat, 2)  # triangle
    check = claim4_check(h2, nat, p3, 2)
    assert check["ok"] and check["scol2_h"] == 3 and check["wcol_2r_g"] == 3


def test_collect_hand_trace_p3():
    inst = UniformInstance(3, (Layer(path(3), 1, 1, Ordering.identity(3)),))
    trace = collect_ordering(inst, "deterministic", None)
    assert list(trace.sigma_star.position) == [0, 1, 2]
    assert trace.rounds == inst.A * inst.n
    assert all(p == inst.A for p in trace.processed_counts)


def test_collect_edgeless():
    inst = UniformInstance(3, (Layer(Graph(3, []), 2, 2, Ordering.identity(3)),))
    trace = collect_ordering(inst, "deterministic", None)
    assert list(trace.sigma_star.position) == [0, 1, 2]


def test_thm41_bound_frozen():
    inst = one_layer(path(3), r=1, a=1)
    trace = collect_ordering(inst, "deterministic", None)
    (check,) = verify_thm41_bound(inst, trace.sigma_star)
    assert check.ok and check.lhs == 2 and check.rhs == 12  # 1*3^2 + 3


def test_thm41_k4():
    inst = one_layer(complete(4), r=1, a=1)
    trace = collect_ordering(inst, "deterministic", None)
    (check,) = verify_thm41_bound(inst, trace.sigma_star)
    assert check.ok and check.lhs == 4 and check.rhs == 20


def test_layer_validation():
    g = path(3)
    with pytest.raises(ValueError):
        Layer(g, 0, 1, Ordering.identity(3))
    with pytest.raises(ValueError):
        Layer(g, 1, 0, Ordering.identity(3))
    with pytest.raises(ValueError):
        Layer(g, 1, 1, Ordering.identity(4))
    with pytest.raises(ValueError):
        UniformInstance(4, (Layer(g, 1, 1, Ordering.identity(3)),))


def test_random_tie_break_still_satisfies_bound():
    rng_g = make_rng(11, 41)
    for trial in range(10):
        g = random_sparse_graph(rng_g, int(rng_g.integers(4, 15)))
        layers = tuple(
            Layer(g, r, a, degeneracy_ordering(g))
            for r, a in ((1, 2), (2, 1))
        )
        inst = UniformInstance(g.n, layers)
        trace = collect_ordering(inst, "random", make_rng(11, 42, trial))
        assert all(c.ok for c in verify_thm41_bound(inst, trace.sigma_star))
        assert trace.rounds == inst.A * inst.n


def test_deterministic_tie_break_is_reproducible():
    g = random_sparse_graph(make_rng(5, 43), 12)
    inst = one_layer(g, r=2, a=3)
    t1 = collect_ordering(inst, "deterministic", None)
    t2 = collect_ordering(inst, "deterministic", None)
    assert t1.sigma_star == t2.sigma_star


def test_audit_partition_respects_bounds():
    rng = make_rng(9, 44)
    for _ in range(5):
        g = random_sparse_graph(rng, int(rng.integers(4, 12)))
        inst = one_layer(g, r=2, a=1)
        trace = collect_ordering(inst, "deterministic", None)
        for entry in audit_partition(inst, trace.sigma_star):
            assert entry["ok"]


def test_dyadic_schedule():
    g = random_sparse_graph(make_rng(2, 45), 10)
    report = uniform_single(g, degeneracy_sigma_provider())
    # n = 10: k = floor(log2(8)) = 3, weights 4, 2, 1
    assert [c.a for c in report.checks] == [4, 2, 1]
    assert [c.r for c in report.checks] == [1, 2, 3]
    assert report.ok


def test_dyadic_tiny_graph_is_vacuous():
    report = uniform_single(path(3), degeneracy_sigma_provider())
    assert report.ok and report.sigma_star.n == 3


def test_eps_schedule_and_run():
    k, weights = eps_schedule(10, Fraction(1))
    assert (k, weights) == (2, [3, 1])
    g = random_sparse_graph(make_rng(2, 46), 10)
    for eps in (Fraction(1, 2), Fraction(1), Fraction(2)):
        report = uniform_single_eps(g, eps, degeneracy_sigma_provider())
        assert report.ok
        for c in report.checks:
            assert isinstance(c.rhs, Fraction)


def test_multi_layers():
    rng = make_rng(4, 47)
    pairs = [(random_sparse_graph(rng, 9), r) for r in (1, 2, 3)]
    report = uniform_multi(pairs, exact_sigma_provider(cap=9))
    assert report.ok and len(report.checks) == 3
    doc = report.to_json()
    assert doc["ok"] and len(doc["sigma_star"]) == 9


def test_load_instance_round_trip():
    text = """
    {"n": 4,
     "layers": [
       {"edges": [[0,1],[1,2],[2,3]], "r": 1, "a": 2, "sigma": [0,1,2,3]},
       {"edges": [[0,2],[1,3]], "r": 2, "a": 1, "sigma": "degeneracy"}
     ]}
    """
    inst = load_instance(text)
    assert inst.n == 4 and inst.k == 2 and inst.A == 3
    report = run_instance(inst)
    assert report.ok
    with pytest.raises(ValueError):
        load_instance('{"n": 2, "layers": []}')


def test_layer_wcol_uses_doubled_radius():
    g = path(5)
    layer = Layer(g, 2, 1, Ordering.identity(5))
    assert layer_wcol(layer) == 5  # wcol_4 of P5 under natural order
