"""Uniform vertex orderings: reachability graphs, the collecting algorithm,
and bound verification.

Given layers (G_i, r_i, a_i, sigma_i) on one vertex set, the collecting
algorithm spends each vertex's budget vector (a_1, ..., a_k) one unit per
round, walking along the per-layer reachability graphs H_i, and appends a
vertex to sigma* when its budget is exhausted.  The resulting ordering
satisfies, for every layer,

    scol_{r_i}(G_i, sigma*) <= (A / a_i) * w_i**2 + w_i,

where A is the total budget and w_i = wcol_{2 r_i}(G_i, sigma_i).
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .exact import DEFAULT_CAP, degeneracy_ordering, exact_min
from .graph import Graph, GraphError, Ordering
from .reach import (
    WEAK,
    effective_radius,
    scol_of_ordering,
    strongly_reachable_set,
    wcol_of_ordering,
    _ball_above,
)

SigmaProvider = Callable[[Graph, int], Ordering]


def exact_sigma_provider(cap: int = DEFAULT_CAP) -> SigmaProvider:
    """Witness orderings from exhaustive search (small n only)."""

    def provide(g: Graph, two_r: int) -> Ordering:
        return exact_min(g, two_r, WEAK, cap=cap).witness

    return provide


def degeneracy_sigma_provider() -> SigmaProvider:
    def provide(g: Graph, two_r: int) -> Ordering:
        return degeneracy_ordering(g)

    return provide


def fixed_sigma_provider(sigma: Ordering) -> SigmaProvider:
    return lambda g, two_r: sigma


@dataclass(frozen=True)
class Layer:
    graph: Graph
    r: int
    a: int
    sigma: Ordering

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"layer radius must be >= 1, got {self.r}")
        if self.a < 1:
            raise ValueError(f"layer weight must be >= 1, got {self.a}")
        if self.sigma.n != self.graph.n:
            raise GraphError("layer ordering does not cover the vertex set")


@dataclass(frozen=True)
class UniformInstance:
    n: int
    layers: tuple[Layer, ...]

    def __post_init__(self):
        if not self.layers:
            raise ValueError("instance needs at least one layer")
        for layer in self.layers:
            if layer.graph.n != self.n:
                raise GraphError(
                    f"layer graph has {layer.graph.n} vertices, expected {self.n}"
                )

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def A(self) -> int:
        return sum(layer.a for layer in self.layers)


@dataclass
class CollectTrace:
    sigma_star: Ordering
    rounds: int
    processed_counts: list[int]
    claim5_max: list[int]


class Claim5ViolationError(AssertionError):
    """The running Claim 5 invariant failed; indicates an implementation bug."""


def build_reachability_graph(g: Graph, sigma: Ordering, r) -> Graph:
    """H with edge uv whenever u is weakly r-reachable from v (u != v)."""
    rr = effective_radius(r, g.n)
    edges = set()
    for y in range(g.n):
        for x in _ball_above(g, sigma.rank, y, rr):
            if x != y:
                edges.add((y, x) if y < x else (x, y))
    return Graph(g.n, edges)


def layer_wcol(layer: Layer) -> int:
    """w_i = wcol_{2 r_i}(G_i, sigma_i)."""
    return wcol_of_ordering(layer.graph, layer.sigma, 2 * layer.r).value


def claim4_check(h: Graph, sigma: Ordering, g: Graph, r: int) -> dict:
    """scol_2(H, sigma) <= wcol_{2r}(G, sigma); a failure is a bug."""
    lhs = scol_of_ordering(h, sigma, 2).value
    rhs = wcol_of_ordering(g, sigma, 2 * r).value
    return {"scol2_h": lhs, "wcol_2r_g": rhs, "ok": lhs <= rhs}


def collect_ordering(
    instance: UniformInstance,
    tie_break: str = "deterministic",
    rng=None,
    hs: Optional[Sequence[Graph]] = None,
    ws: Optional[Sequence[int]] = None,
    enforce_claim5: bool = True,
) -> CollectTrace:
    """Run the collecting loop and return sigma* with its trace.

    Tie-breaks (the loop's "pick any" choices): the deterministic policy
    picks the sigma_1-minimum uncollected vertex for fresh starts and the
    smallest layer index with remaining budget; the "random" policy draws
    both from `rng`.
    """
    if tie_break not in ("deterministic", "random"):
        raise ValueError(f"unknown tie-break policy {tie_break!r}")
    if tie_break == "random" and rng is None:
        raise ValueError("random tie-break needs an rng")
    n = instance.n
    layers = instance.layers
    k = instance.k
    A = instance.A
    if hs is None:
        hs = [build_reachability_graph(l.graph, l.sigma, l.r) for l in layers]
    if ws is None:
        ws = [layer_wcol(l) for l in layers]

    budgets = [[layer.a for layer in layers] for _ in range(n)]
    remaining = [A] * n
    uncollected = [True] * n
    n_uncollected = n
    processed = [0] * n
    sigma_star: list[int] = []
    rounds = 0

    # Claim 5 accounting: per layer, the number of collected vertices in
    # N_{H_i}(w) that are sigma_i-after w, for each uncollected w.
    c5_counts = [[0] * n for _ in range(k)]
    claim5_max = [0] * k

    sigma1 = layers[0].sigma

    def fresh_vertex():
        if tie_break == "deterministic":
            return min(
                (v for v in range(n) if uncollected[v]),
                key=lambda v: sigma1.rank[v],
            )
        choices = [v for v in range(n) if uncollected[v]]
        return choices[int(rng.integers(len(choices)))]

    def pick_layer(v):
        if tie_break == "deterministic":
            for i in range(k):
                if budgets[v][i]:
                    return i
            raise AssertionError("processed a vertex with empty budget")
        choices = [i for i in range(k) if budgets[v][i]]
        if not choices:
            raise AssertionError("processed a vertex with empty budget")
        return choices[int(rng.integers(len(choices)))]

    def collect(v):
        nonlocal n_uncollected
        uncollected[v] = False
        n_uncollected -= 1
        sigma_star.append(v)
        for i in range(k):
            h = hs[i]
            ranks = layers[i].sigma.rank
            for w in h.adj[v]:
                if uncollected[w] and ranks[w] < ranks[v]:
                    c5_counts[i][w] += 1
                    if c5_counts[i][w] > claim5_max[i]:
                        claim5_max[i] = c5_counts[i][w]
                        if enforce_claim5 and (
                            c5_counts[i][w] * layers[i].a > A * ws[i]
                        ):
                            raise Claim5ViolationError(
                                f"layer {i}: vertex {w} has "
                                f"{c5_counts[i][w]} collected sigma_i-later "
                                f"H-neighbors, bound is "
                                f"{A}/{layers[i].a} * {ws[i]}"
                            )

    v = fresh_vertex()
    while n_uncollected:
        i = pick_layer(v)
        if budgets[v][i] <= 0:
            raise AssertionError("budget would go negative")
        budgets[v][i] -= 1
        remaining[v] -= 1
        processed[v] += 1
        rounds += 1
        if remaining[v] == 0:
            collect(v)
        h = hs[i]
        ranks = layers[i].sigma.rank
        nbhd = [w for w in h.adj[v] if uncollected[w]]
        if uncollected[v]:
            nbhd.append(v)  # closed neighborhood
        if nbhd:
            v = min(nbhd, key=lambda w: ranks[w])
        elif n_uncollected:
            v = fresh_vertex()

    return CollectTrace(
        sigma_star=Ordering(sigma_star),
        rounds=rounds,
        processed_counts=processed,
        claim5_max=claim5_max,
    )


@dataclass(frozen=True)
class LayerCheck:
    r: int
    a: int
    w: int
    lhs: int
    rhs: Fraction
    ok: bool

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "a": self.a,
            "w": self.w,
            "lhs": self.lhs,
            "rhs_num": self.rhs.numerator,
            "rhs_den": self.rhs.denominator,
            "ok": self.ok,
        }


def verify_thm41_bound(
    instance: UniformInstance,
    sigma_star: Ordering,
    ws: Optional[Sequence[int]] = None,
) -> list[LayerCheck]:
    """Per layer: scol_{r_i}(G_i, sigma*) <= (A/a_i) w_i^2 + w_i, exact
    rational arithmetic."""
    if sigma_star.n != instance.n:
        raise GraphError("sigma* does not cover the shared vertex set")
    if ws is None:
        ws = [layer_wcol(l) for l in instance.layers]
    A = instance.A
    checks = []
    for layer, w in zip(instance.layers, ws):
        lhs = scol_of_ordering(layer.graph, sigma_star, layer.r).value
        rhs = Fraction(A, layer.a) * w * w + w
        checks.append(LayerCheck(layer.r, layer.a, w, lhs, rhs, lhs <= rhs))
    return checks


# -- X1 / X2 / X3 audit -------------------------------------------------------

def _shortest_back_path(g: Graph, rank_star, w, u, r: int):
    """A shortest u..w path of length <= r with internal vertices
    sigma*-after w, as a vertex list from w to u; BFS expands ascending
    vertex ids, so ties resolve deterministically."""
    rw = rank_star[w]
    parent = {w: None}
    queue = deque([(w, 0)])
    while queue:
        v, d = queue.popleft()
        if d + 1 > r:
            continue
        for nb in g.adj[v]:
            if nb == u:
                path = [u, v]
                while parent[v] is not None:
                    v = parent[v]
                    path.append(v)
                return path
            if rank_star[nb] > rw and nb not in parent:
                parent[nb] = v
                queue.append((nb, d + 1))
    return None


def audit_partition(
    instance: UniformInstance,
    sigma_star: Ordering,
    ws: Optional[Sequence[int]] = None,
) -> list[dict]:
    """Classify each strongly reachable vertex by the sigma_i-minimum of a
    witnessing path and check the three cardinality bounds from the proof
    of the uniform-ordering theorem."""
    if ws is None:
        ws = [layer_wcol(l) for l in instance.layers]
    A = instance.A
    out = []
    for layer, w_i in zip(instance.layers, ws):
        g = layer.graph
        sig_i = layer.sigma
        bound2 = Fraction(A, layer.a) * w_i
        bound3 = (w_i - 1) * bound2
        worst = {"x1": 0, "x2": 0, "x3": 0}
        ok = True
        for w in range(instance.n):
            x1 = x2 = x3 = 0
            for u in strongly_reachable_set(g, sigma_star, w, layer.r):
                if u == w:
                    continue
                path = _shortest_back_path(g, sigma_star.rank, w, u, layer.r)
                assert path is not None, "no witnessing path for a reachable vertex"
                p = min(path, key=lambda v: sig_i.rank[v])
                if p == u:
                    x1 += 1
                elif p == w:
                    x2 += 1
                else:
                    x3 += 1
            worst["x1"] = max(worst["x1"], x1)
            worst["x2"] = max(worst["x2"], x2)
            worst["x3"] = max(worst["x3"], x3)
            if not (x1 <= w_i - 1 and x2 <= bound2 and x3 <= bound3):
                ok = False
        out.append(
            {
                "r": layer.r,
                "a": layer.a,
                "w": w_i,
                "max_x1": worst["x1"],
                "max_x2": worst["x2"],
                "max_x3": worst["x3"],
                "ok": ok,
            }
        )
    return out


# -- theorem wrappers ----------------------------------------------------------

@dataclass
class UniformReport:
    sigma_star: Ordering
    checks: list[LayerCheck]
    trace: Optional[CollectTrace] = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self, audit: Optional[list[dict]] = None) -> dict:
        doc = {
            "sigma_star": list(self.sigma_star.position),
            "layers": [c.to_json() for c in self.checks],
            "claim5_max": list(self.trace.claim5_max) if self.trace else [],
            "ok": self.ok,
        }
        doc.update(self.extra)
        if audit is not None:
            doc["audit"] = audit
        return doc


def run_instance(
    instance: UniformInstance,
    tie_break: str = "deterministic",
    rng=None,
) -> UniformReport:
    hs = [build_reachability_graph(l.graph, l.sigma, l.r) for l in instance.layers]
    ws = [layer_wcol(l) for l in instance.layers]
    trace = collect_ordering(instance, tie_break, rng, hs=hs, ws=ws)
    checks = verify_thm41_bound(instance, trace.sigma_star, ws=ws)
    return UniformReport(trace.sigma_star, checks, trace)


def uniform_single(
    g: Graph,
    sigma_provider: SigmaProvider,
    tie_break: str = "deterministic",
    rng=None,
) -> UniformReport:
    """Dyadic weights: k = floor(log2(n - 2)), a_i = 2^(k - i), so that
    scol_i(G, sigma*) <= (2^i + 1) * w_i^2 for i = 1..k."""
    n = g.n
    if n <= 3:
        return UniformReport(Ordering.identity(n), [], None, {"k": 0})
    k = (n - 2).bit_length() - 1  # floor(log2(n - 2))
    layers = tuple(
        Layer(g, i, 2 ** (k - i), sigma_provider(g, 2 * i))
        for i in range(1, k + 1)
    )
    instance = UniformInstance(n, layers)
    report = run_instance(instance, tie_break, rng)
    # tighten the per-layer check to the dyadic form of the bound
    checks = []
    for c in report.checks:
        rhs = Fraction((2**c.r + 1) * c.w * c.w)
        checks.append(LayerCheck(c.r, c.a, c.w, c.lhs, rhs, c.lhs <= rhs))
    report.checks = checks
    report.extra = {"k": k, "A": instance.A}
    return report


def eps_schedule(n: int, eps: Fraction) -> tuple[int, list[int]]:
    """k minimal with (1+eps)^(k+2)/eps^2 + 1 >= n, and the weights
    a_i = ceil((1+eps)^(k+1-i) - 1)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    base = 1 + eps
    k = 1
    while base ** (k + 2) / (eps * eps) + 1 < n:
        k += 1
    weights = [math.ceil(base ** (k + 1 - i) - 1) for i in range(1, k + 1)]
    return k, weights


def uniform_single_eps(
    g: Graph,
    eps: Fraction,
    sigma_provider: SigmaProvider,
    tie_break: str = "deterministic",
    rng=None,
) -> UniformReport:
    """Geometric weights for the (1+eps) form of the bound:
    scol_i(G, sigma*) <= ((1+eps)^(i+1)/eps^2 + 1) * w_i^2."""
    eps = Fraction(eps)
    n = g.n
    k, weights = eps_schedule(n, eps)
    layers = tuple(
        Layer(g, i, weights[i - 1], sigma_provider(g, 2 * i))
        for i in range(1, k + 1)
    )
    instance = UniformInstance(n, layers)
    A = instance.A
    base = 1 + eps
    if not A < base ** (k + 1) / eps:
        raise AssertionError(
            f"total weight A={A} violates the geometric-sum estimate"
        )
    report = run_instance(instance, tie_break, rng)
    checks = []
    for c in report.checks:
        rhs = (base ** (c.r + 1) / (eps * eps) + 1) * c.w * c.w
        checks.append(LayerCheck(c.r, c.a, c.w, c.lhs, Fraction(rhs), c.lhs <= rhs))
    report.checks = checks
    report.extra = {"k": k, "A": A, "eps": str(eps)}
    return report


def uniform_multi(
    pairs: Sequence[tuple[Graph, int]],
    sigma_provider: SigmaProvider,
    tie_break: str = "deterministic",
    rng=None,
) -> UniformReport:
    """All weights 1: scol_{r_i}(G_i, sigma*) <= (k+1) * w_i^2 per layer."""
    if not pairs:
        raise ValueError("need at least one (graph, radius) pair")
    n = pairs[0][0].n
    layers = tuple(
        Layer(gi, ri, 1, sigma_provider(gi, 2 * ri)) for gi, ri in pairs
    )
    instance = UniformInstance(n, layers)
    k = instance.k
    report = run_instance(instance, tie_break, rng)
    checks = []
    for c in report.checks:
        rhs = Fraction((k + 1) * c.w * c.w)
        checks.append(LayerCheck(c.r, c.a, c.w, c.lhs, rhs, c.lhs <= rhs))
    report.checks = checks
    report.extra = {"k": k, "A": instance.A}
    return report


# -- instance file format ------------------------------------------------------

def load_instance(text: str, cap: int = DEFAULT_CAP) -> UniformInstance:
    """JSON instance: { "n", "layers": [ { "edges", "r", "a",
    "sigma": [permutation] | "exact" | "degeneracy" } ] }."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid instance JSON: {exc}") from None
    try:
        n = int(doc["n"])
        raw_layers = doc["layers"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"instance missing field: {exc}") from None
    layers = []
    for entry in raw_layers:
        g = Graph(n, [tuple(e) for e in entry["edges"]])
        r = int(entry["r"])
        a = int(entry.get("a", 1))
        sig = entry.get("sigma", "degeneracy")
        if sig == "degeneracy":
            sigma = degeneracy_ordering(g)
        elif sig == "exact":
            sigma = exact_min(g, 2 * r, WEAK, cap=cap).witness
        else:
            sigma = Ordering([int(v) for v in sig])
        layers.append(Layer(g, r, a, sigma))
    return UniformInstance(n, tuple(layers))
