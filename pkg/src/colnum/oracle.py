"""Naive all-simple-paths reference implementations.

These deliberately share no code with the BFS-based routines in `reach`;
they enumerate every simple path from a vertex and apply the definitions
verbatim.  Only usable at desk scale (n <= ~8).
"""

from __future__ import annotations

from .graph import Graph, Ordering
from .reach import effective_radius


def reach_sets_by_paths(g: Graph, sigma: Ordering, x: int, r):
    """(W_r[x], S_r[x]) by exhaustive simple-path enumeration."""
    rr = effective_radius(r, g.n)
    rank = sigma.rank
    weak = {x}
    strong = {x}

    def walk(u, path_vertices, min_rank, length):
        # min_rank = minimum rank among the path vertices walked so far
        # (x..u, excluding the candidate endpoint w)
        for w in g.adj[u]:
            if w in path_vertices:
                continue
            if rank[w] <= rank[x]:
                if min_rank >= rank[w]:
                    weak.add(w)
                if min_rank >= rank[x]:
                    strong.add(w)
            if length + 1 < rr:
                walk(w, path_vertices | {w}, min(min_rank, rank[w]), length + 1)

    walk(x, {x}, rank[x], 0)
    return weak, strong


def wcol_by_paths(g: Graph, sigma: Ordering, r) -> int:
    return max(len(reach_sets_by_paths(g, sigma, x, r)[0]) for x in range(g.n))


def scol_by_paths(g: Graph, sigma: Ordering, r) -> int:
    return max(len(reach_sets_by_paths(g, sigma, x, r)[1]) for x in range(g.n))
