"""Counterexample family: no single ordering is near-optimal for two
distances at once.

For parameters (t, n, r, r') the construction takes n groups of t hub
vertices (the Z blocks) and joins every ordered pair of groups through a
junction vertex x_{i,j}: t parallel paths of length r from Z_i to x_{i,j}
and t parallel paths of length r' - r from x_{i,j} to Z_j.  The connecting
gadgets are disjoint except at their Z ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, Ordering, bfs_distances, distance
from .reach import scol_of_ordering

CLAIM3_LOW = Fraction(246, 1000)   # scol_r(G, sigma) >= .246 n, or ...
CLAIM3_HIGH = Fraction(754, 1000)  # ... scol_r'(G, sigma) >= .754 n t


@dataclass(frozen=True)
class Example21Params:
    t: int
    n: int
    r: int
    r_prime: int

    def __post_init__(self):
        if not (4 <= self.t <= self.n):
            raise ValueError(f"need 4 <= t <= n, got t={self.t}, n={self.n}")
        if not (1 <= self.r < self.r_prime):
            raise ValueError(
                f"need 1 <= r < r', got r={self.r}, r'={self.r_prime}"
            )

    @property
    def vertex_count(self) -> int:
        t, n, rp = self.t, self.n, self.r_prime
        return n * t + n * (n - 1) * (1 + t * (rp - 2))


@dataclass(frozen=True)
class Example21Graph:
    params: Example21Params
    graph: Graph
    labels: dict          # label string -> vertex id
    z_parts: tuple        # z_parts[i-1] = ids of Z_i
    x_of: dict            # (i, j) -> id of x_{i,j}
    x_parts: tuple        # x_parts[i-1] = ids of X_i = {x_{i,j}, x_{j,i}}
    y_vertices: tuple     # all internal path vertex ids

    @property
    def z_vertices(self):
        return tuple(v for part in self.z_parts for v in part)

    @property
    def x_vertices(self):
        return tuple(self.x_of[key] for key in sorted(self.x_of))


def build_example21(params: Example21Params) -> Example21Graph:
    t, n, r, rp = params.t, params.n, params.r, params.r_prime
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    next_id = 0

    def new_vertex(label: str) -> int:
        nonlocal next_id
        labels[label] = next_id
        next_id += 1
        return next_id - 1

    z = [[new_vertex(f"z_{i}_{h}") for h in range(1, t + 1)]
         for i in range(1, n + 1)]

    ordered_pairs = [(i, j) for i in range(1, n + 1)
                     for j in range(1, n + 1) if i != j]
    x_of = {(i, j): new_vertex(f"x_{i}_{j}") for i, j in ordered_pairs}

    y_ids: list[int] = []

    def add_path(u: int, v: int, length: int, tag: str):
        # path of `length` edges from u to v with fresh internal vertices
        prev = u
        for s in range(1, length):
            mid = new_vertex(f"{tag}_{s}")
            y_ids.append(mid)
            edges.append((prev, mid))
            prev = mid
        edges.append((prev, v))

    for i, j in ordered_pairs:
        xij = x_of[(i, j)]
        for h in range(1, t + 1):
            add_path(z[i - 1][h - 1], xij, r, f"p_{i}_{j}_{h}")
            add_path(xij, z[j - 1][h - 1], rp - r, f"q_{i}_{j}_{h}")

    graph = Graph(next_id, edges)
    assert graph.n == params.vertex_count

    x_parts = tuple(
        tuple(sorted(
            {x_of[(i, j)] for j in range(1, n + 1) if j != i}
            | {x_of[(j, i)] for j in range(1, n + 1) if j != i}
        ))
        for i in range(1, n + 1)
    )
    return Example21Graph(
        params=params,
        graph=graph,
        labels=labels,
        z_parts=tuple(tuple(part) for part in z),
        x_of=x_of,
        x_parts=x_parts,
        y_vertices=tuple(y_ids),
    )


def verify_facts(ex: Example21Graph) -> dict:
    """Structural facts of the family:

    E1: all cross-group hub distances equal r'.
    E2: hubs are separated by the junctions; removing x_{i,j} and x_{j,i}
        pushes Z_i and Z_j beyond distance r'.
    E3: junctions of unrelated pairs are more than r' apart.
    """
    g = ex.graph
    p = ex.params
    n, rp = p.n, p.r_prime

    e1 = True
    for i in range(n):
        for zv in ex.z_parts[i]:
            dist = bfs_distances(g, [zv], cap=rp)
            for j in range(n):
                if j == i:
                    continue
                if any(dist.get(w) != rp for w in ex.z_parts[j]):
                    e1 = False

    # Every Z-path meets X: no component of G - X holds two hubs.
    gx = g.without_vertices(ex.x_vertices)
    z_all = set(ex.z_vertices)
    e2 = True
    seen: set[int] = set()
    for zv in ex.z_vertices:
        if zv in seen:
            continue
        comp = bfs_distances(gx, [zv]).keys()
        seen.update(comp)
        if len(z_all & set(comp)) != 1:
            e2 = False
    # Length-r' hub paths must pass the pair's own junctions.
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cut = g.without_vertices([ex.x_of[(i, j)], ex.x_of[(j, i)]])
            dist = bfs_distances(cut, ex.z_parts[i - 1], cap=rp)
            if any(w in dist for w in ex.z_parts[j - 1]):
                e2 = False

    e3 = True
    for (i, j), xid in ex.x_of.items():
        near = set(ex.x_parts[i - 1]) | set(ex.x_parts[j - 1])
        dist = bfs_distances(g, [xid], cap=rp)
        for other in ex.x_of.values():
            if other not in near and other in dist:
                e3 = False

    return {"E1": e1, "E2": e2, "E3": e3, "ok": e1 and e2 and e3}


def claim_orderings(ex: Example21Graph) -> tuple[Ordering, Ordering]:
    """(sigma with Z < X < Y, sigma with X < Z < Y); within each block the
    order is label-lexicographic, which is the construction id order."""
    z = sorted(ex.z_vertices)
    x = sorted(ex.x_vertices)
    y = sorted(ex.y_vertices)
    return Ordering(z + x + y), Ordering(x + z + y)


def verify_claims(ex: Example21Graph, samples: int = 100, rng=None) -> dict:
    """Claim 1: scol_r(G, Z<X<Y) <= 2t + 1.  Claim 2:
    scol_r'(G, X<Z<Y) <= 4n - 6.  Claim 3, sampled: every ordering has
    scol_r >= .246 n or scol_r' >= .754 n t."""
    g = ex.graph
    p = ex.params
    sigma_zxy, sigma_xzy = claim_orderings(ex)

    scol_r = scol_of_ordering(g, sigma_zxy, p.r).value
    claim1 = {"scol_r": scol_r, "bound": 2 * p.t + 1, "ok": scol_r <= 2 * p.t + 1}

    scol_rp = scol_of_ordering(g, sigma_xzy, p.r_prime).value
    claim2 = {"scol_rp": scol_rp, "bound": 4 * p.n - 6, "ok": scol_rp <= 4 * p.n - 6}

    low = CLAIM3_LOW * p.n
    high = CLAIM3_HIGH * p.n * p.t
    failures = 0
    checked = 0
    if samples and rng is not None:
        for _ in range(samples):
            perm = [int(v) for v in rng.permutation(g.n)]
            sigma = Ordering(perm)
            checked += 1
            if scol_of_ordering(g, sigma, p.r).value >= low:
                continue
            if scol_of_ordering(g, sigma, p.r_prime).value >= high:
                continue
            failures += 1
    claim3 = {
        "samples": checked,
        "low_threshold": float(low),
        "high_threshold": float(high),
        "violations": failures,
        "ok": failures == 0,
    }
    return {
        "claim1": claim1,
        "claim2": claim2,
        "claim3": claim3,
        "ok": claim1["ok"] and claim2["ok"] and claim3["ok"],
    }
