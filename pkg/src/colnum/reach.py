"""Reachability sets and per-ordering generalized coloring numbers.

For a graph G, ordering sigma and radius r this module computes the weakly
and strongly r-reachable sets of each vertex, the resulting wcol/scol
values, and the r-admissibility (maximum back-connectivity + 1).

Radius semantics: a positive integer, or INFINITY.  Since paths are simple,
INFINITY is equivalent to r = n and is implemented that way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, Ordering

INFINITY = float("inf")

WEAK = "weak"
STRONG = "strong"
ADM = "adm"
KINDS = (WEAK, STRONG, ADM)


class BudgetExceededError(RuntimeError):
    """Exact path-packing search exceeded its candidate budget."""

    def __init__(self, vertex: int, budget: int):
        super().__init__(
            f"path-packing budget of {budget} candidate paths exceeded "
            f"at vertex {vertex}"
        )
        self.vertex = vertex
        self.budget = budget


def effective_radius(r, n: int) -> int:
    """Clamp a radius to the finite surrogate usable on n vertices."""
    if r == INFINITY:
        return max(n, 1)
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"radius must be a positive integer or INFINITY, got {r!r}")
    return min(r, max(n, 1))


@dataclass(frozen=True)
class ReachReport:
    """Per-vertex reachability set sizes and their maximum."""

    kind: str
    r: object  # positive int or INFINITY
    per_vertex: tuple[int, ...]
    value: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "r": "inf" if self.r == INFINITY else self.r,
            "value": self.value,
            "per_vertex": list(self.per_vertex),
        }


def _report(kind, r, sizes) -> ReachReport:
    return ReachReport(kind, r, tuple(sizes), max(sizes) if sizes else 0)


def weakly_reachable_set(g: Graph, sigma: Ordering, x: int, r) -> set[int]:
    """W_r[G,sigma,x]: vertices y <=_sigma x joined to x by a path of
    length <= r whose every vertex is >=_sigma y.  Contains x.

    Definitional form: y is in W_r[x] iff x lies within distance r of y in
    the subgraph induced on { v : v >=_sigma y }.
    """
    g.check_vertex(x)
    rr = effective_radius(r, g.n)
    rank = sigma.rank
    result = {x}
    for y in range(g.n):
        if y == x or rank[y] > rank[x]:
            continue
        if _reaches_within(g, rank, y, x, rr, rank[y]):
            result.add(y)
    return result


def _reaches_within(g, rank, src, dst, depth_cap, min_rank) -> bool:
    # BFS from src restricted to vertices of rank >= min_rank.
    if src == dst:
        return True
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if d >= depth_cap:
            continue
        for w in g.adj[u]:
            if rank[w] >= min_rank and w not in dist:
                if w == dst:
                    return True
                dist[w] = d + 1
                queue.append(w)
    return False


def strongly_reachable_set(g: Graph, sigma: Ordering, x: int, r) -> set[int]:
    """S_r[G,sigma,x]: vertices y <=_sigma x joined to x by a path of
    length <= r whose every vertex other than y is >=_sigma x.  Contains x.
    """
    g.check_vertex(x)
    rr = effective_radius(r, g.n)
    rank = sigma.rank
    rx = rank[x]
    # BFS from x through { v : v >_sigma x }, depth <= rr - 1.
    dist = {x: 0}
    queue = deque([x])
    reach = {x}
    while queue:
        u = queue.popleft()
        d = dist[u]
        for w in g.adj[u]:
            if rank[w] < rx:
                reach.add(w)  # endpoint one edge beyond u, length d + 1 <= rr
            elif w not in dist and d + 1 <= rr - 1:
                dist[w] = d + 1
                queue.append(w)
    return reach


def weak_reach_sizes(g: Graph, sigma: Ordering, r) -> list[int]:
    """|W_r[x]| for every x, via one depth-limited BFS per source y.

    y belongs to W_r[x] exactly when x is reachable from y within r steps
    inside the subgraph on { v : v >=_sigma y }; sweeping over y gives all
    sets in O(n (n + m)).
    """
    rr = effective_radius(r, g.n)
    rank = sigma.rank
    sizes = [0] * g.n
    for y in range(g.n):
        for x in _ball_above(g, rank, y, rr):
            sizes[x] += 1
    return sizes


def _ball_above(g, rank, y, depth_cap):
    """Vertices reachable from y within depth_cap using only ranks >= rank[y]."""
    ry = rank[y]
    dist = {y: 0}
    queue = deque([y])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if d >= depth_cap:
            continue
        for w in g.adj[u]:
            if rank[w] >= ry and w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist.keys()


def strong_reach_sizes(g: Graph, sigma: Ordering, r) -> list[int]:
    return [len(strongly_reachable_set(g, sigma, x, r)) for x in range(g.n)]


def wcol_of_ordering(g: Graph, sigma: Ordering, r) -> ReachReport:
    return _report(WEAK, r, weak_reach_sizes(g, sigma, r))


def scol_of_ordering(g: Graph, sigma: Ordering, r) -> ReachReport:
    return _report(STRONG, r, strong_reach_sizes(g, sigma, r))


def _candidate_paths(g, x, r, internal_ok, end_ok, budget):
    """All simple paths from x of length in [1, r] whose internal vertices
    satisfy internal_ok and whose last vertex satisfies end_ok.  Each path
    is returned as a frozenset of its vertices minus x."""
    paths = []
    count = 0

    def extend(u, used, length):
        nonlocal count
        for w in g.adj[u]:
            if w == x or w in used:
                continue
            if end_ok(w):
                count += 1
                if count > budget:
                    raise BudgetExceededError(x, budget)
                paths.append(used | {w})
            if length + 1 < r and internal_ok(w):
                extend(w, used | {w}, length + 1)

    extend(x, frozenset(), 0)
    return paths


def max_path_packing(g: Graph, x: int, r: int, internal_ok, end_ok,
                     budget: int = 100_000) -> int:
    """Maximum number of pairwise vertex-disjoint (except at x) paths from
    x, each of length in [1, r], internal vertices filtered by internal_ok
    and far ends by end_ok.  Exact branch-and-bound over candidate paths."""
    paths = _candidate_paths(g, x, r, internal_ok, end_ok, budget)
    if not paths:
        return 0
    # Subset-minimal candidates suffice: replacing a path by a sub-candidate
    # keeps any packing disjoint.
    paths.sort(key=len)
    minimal = []
    for p in paths:
        if not any(q <= p for q in minimal):
            minimal.append(p)
    best = 0

    def search(idx, used, size):
        nonlocal best
        if size + (len(minimal) - idx) <= best:
            return
        if idx == len(minimal):
            best = max(best, size)
            return
        p = minimal[idx]
        if not (p & used):
            search(idx + 1, used | p, size + 1)
        search(idx + 1, used, size)

    search(0, frozenset(), 0)
    return best


def back_connectivity(g: Graph, sigma: Ordering, x: int, r,
                      budget: int = 100_000) -> int:
    """b_r[G,sigma,x]: maximum number of vertex-disjoint (except at x)
    paths of length <= r from x to ends y <_sigma x, with all internal
    vertices >_sigma x."""
    g.check_vertex(x)
    rr = effective_radius(r, g.n)
    rank = sigma.rank
    rx = rank[x]
    return max_path_packing(
        g, x, rr,
        internal_ok=lambda v: rank[v] > rx,
        end_ok=lambda v: rank[v] < rx,
        budget=budget,
    )


def adm_of_ordering(g: Graph, sigma: Ordering, r,
                    budget: int = 100_000) -> ReachReport:
    """adm_r(G,sigma): per vertex b_r + 1 (the vertex counts itself)."""
    sizes = [back_connectivity(g, sigma, x, r, budget) + 1 for x in range(g.n)]
    return _report(ADM, r, sizes)


def reach_report(g: Graph, sigma: Ordering, r, kind: str,
                 budget: int = 100_000) -> ReachReport:
    if sigma.n != g.n:
        raise ValueError(
            f"ordering covers {sigma.n} vertices, graph has {g.n}"
        )
    if kind == WEAK:
        return wcol_of_ordering(g, sigma, r)
    if kind == STRONG:
        return scol_of_ordering(g, sigma, r)
    if kind == ADM:
        return adm_of_ordering(g, sigma, r, budget)
    raise ValueError(f"unknown kind {kind!r}")
