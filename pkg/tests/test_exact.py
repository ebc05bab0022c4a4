import pytest
from hypothesis import given, settings, strategies as st

from colnum.exact import (
    CapExceededError,
    degeneracy_ordering,
    exact_min,
    exact_min_enumerate,
    treedepth_oracle,
    treewidth_oracle,
)
from colnum.graph import Graph
from colnum.reach import ADM, INFINITY, STRONG, WEAK, reach_report, scol_of_ordering
from colnum.rng import make_rng, random_sparse_graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_exact_frozen_values():
    assert exact_min(cycle(5), 2, STRONG).value == 3
    assert exact_min(path(4), 1, STRONG).value == 2
    assert exact_min(complete(4), 1, STRONG).value == 4


def test_witness_attains_value():
    for g in (path(5), cycle(6), complete(4)):
        for r in (1, 2, INFINITY):
            for kind in (STRONG, WEAK, ADM):
                res = exact_min(g, r, kind)
                assert reach_report(g, res.witness, r, kind).value == res.value


def test_oracles_frozen_values():
    assert treewidth_oracle(cycle(5)) == 2
    assert treewidth_oracle(complete(5)) == 4
    assert treewidth_oracle(path(6)) == 1
    assert treedepth_oracle(path(4)) == 3
    assert treedepth_oracle(Graph(1, [])) == 1
    assert treedepth_oracle(complete(4)) == 4


def test_prop11_on_small_graphs():
    for g in (path(5), cycle(5), cycle(6), complete(4),
              Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])):
        assert exact_min(g, INFINITY, STRONG).value == treewidth_oracle(g) + 1
        assert exact_min(g, INFINITY, WEAK).value == treedepth_oracle(g)


def test_cap_enforced_and_overridable():
    g = path(11)
    with pytest.raises(CapExceededError):
        exact_min(g, 1, STRONG)
    assert exact_min(g, 1, STRONG, cap=11).value == 2
    with pytest.raises(CapExceededError):
        treewidth_oracle(path(30))


def test_degeneracy_ordering_star():
    star = Graph(6, [(5, i) for i in range(5)])
    sigma = degeneracy_ordering(star)
    # leaves removed first means they sit late; the center is early
    assert scol_of_ordering(star, sigma, 1).value == 2


def test_exact_trivial_graphs():
    assert exact_min(Graph(1, []), 1, WEAK).value == 1
    assert exact_min(Graph(3, []), 2, STRONG).value == 1
    assert exact_min(Graph(2, [(0, 1)]), 1, ADM).value == 2


@settings(max_examples=30, deadline=None)
@given(
    st.integers(0, 10**6),
    st.integers(2, 6),
    st.sampled_from([1, 2, INFINITY]),
    st.sampled_from([WEAK, STRONG, ADM]),
)
def test_exact_matches_full_enumeration(seed, n, r, kind):
    g = random_sparse_graph(make_rng(seed, 31), n)
    assert exact_min(g, r, kind).value == exact_min_enumerate(g, r, kind).value


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 7))
def test_scol_monotone_under_edge_deletion(seed, n):
    rng = make_rng(seed, 32)
    g = random_sparse_graph(rng, n)
    if not g.edges:
        return
    edges = sorted(g.edges)
    drop = edges[int(rng.integers(0, len(edges)))]
    sub = Graph(n, [e for e in edges if e != drop])
    for r in (1, 2):
        assert exact_min(sub, r, STRONG).value <= exact_min(g, r, STRONG).value
        assert exact_min(sub, r, WEAK).value <= exact_min(g, r, WEAK).value


def test_exact_result_json():
    doc = exact_min(path(4), INFINITY, WEAK).to_json()
    assert doc["r"] == "inf"
    assert doc["value"] == 3
    assert sorted(doc["witness"]) == [0, 1, 2, 3]
