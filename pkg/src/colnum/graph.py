"""Immutable graph and vertex-ordering types, parsing and distance queries.

Vertices are dense integers 0..n-1.  External labels (e.g. the labelled
vertices of the counterexample family) live in sidecar maps, never here.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

UNREACHABLE = None


class GraphError(ValueError):
    """Malformed graph or ordering input."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Finite simple undirected graph with adjacency lists.

    Immutable after construction; safe for concurrent readers.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            edge_set.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(edge_set)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"invalid vertex id {v} (n = {self.n})")

    def without_vertices(self, removed: Iterable[int]) -> "Graph":
        """Subgraph with `removed` deleted; vertex ids are kept (removed
        vertices become isolated non-vertices of the same index range)."""
        gone = set(removed)
        keep = [(u, v) for u, v in self.edges if u not in gone and v not in gone]
        return Graph(self.n, keep)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on `vertices`, relabelled densely.

        Returns (subgraph, old_ids) with old_ids[new] = old.
        """
        old_ids = sorted(set(vertices))
        for v in old_ids:
            self.check_vertex(v)
        new_of = {old: new for new, old in enumerate(old_ids)}
        keep = set(old_ids)
        edges = [
            (new_of[u], new_of[v])
            for u, v in self.edges
            if u in keep and v in keep
        ]
        return Graph(len(old_ids), edges), old_ids

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """Total order on 0..n-1: position[rank] = vertex, rank[vertex] = rank.

    Smaller rank = earlier = sigma-smaller.
    """

    __slots__ = ("position", "rank")

    def __init__(self, position: Sequence[int]):
        n = len(position)
        rank = [-1] * n
        for i, v in enumerate(position):
            if not (0 <= v < n) or rank[v] != -1:
                raise GraphError(
                    f"ordering is not a permutation of 0..{n - 1}: "
                    f"bad or repeated id {v}"
                )
            rank[v] = i
        self.position = tuple(position)
        self.rank = tuple(rank)

    @property
    def n(self) -> int:
        return len(self.position)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(range(n))

    def __eq__(self, other):
        return isinstance(other, Ordering) and self.position == other.position

    def __hash__(self):
        return hash(self.position)

    def __repr__(self):
        return f"Ordering({list(self.position)})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v".

    `#`-prefixed comment lines and blank lines are ignored.  Errors carry
    the offending (1-based) line number.
    """
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise GraphError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphError("non-integer header", lineno) from None
            if n < 0 or m < 0:
                raise GraphError("negative header values", lineno)
            continue
        if len(parts) != 2:
            raise GraphError("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError("non-integer edge endpoints", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})", lineno)
        seen.add(e)
        edges.append(e)
    if n < 0:
        raise GraphError("empty input, missing header")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, n: int) -> Ordering:
    """Parse n whitespace-separated ids, sigma-smallest first."""
    try:
        ids = [int(tok) for tok in text.split()]
    except ValueError:
        raise GraphError("non-integer token in ordering") from None
    if len(ids) != n:
        raise GraphError(f"expected {n} ids, found {len(ids)}")
    return Ordering(ids)


def serialize_ordering(sigma: Ordering) -> str:
    return " ".join(str(v) for v in sigma.position) + "\n"


def induced_ordering(sigma: Ordering, subset: Iterable[int]) -> tuple[Ordering, list[int]]:
    """Restriction of sigma to `subset`, relabelled into a dense range.

    Returns (ordering over 0..|S|-1, old_ids) where old_ids[new] = old id
    and new ids are assigned by ascending old id.  The original-id view of
    the result is [old_ids[v] for v in result.position].
    """
    old_ids = sorted(set(subset))
    if not old_ids:
        raise GraphError("empty subset")
    for v in old_ids:
        if not (0 <= v < sigma.n):
            raise GraphError(f"unknown vertex id {v} in subset")
    new_of = {old: new for new, old in enumerate(old_ids)}
    by_rank = sorted(old_ids, key=lambda v: sigma.rank[v])
    return Ordering([new_of[v] for v in by_rank]), old_ids


def distance(g: Graph, x: int, y: int) -> Optional[int]:
    """BFS shortest-path length; UNREACHABLE (None) across components."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        return 0
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                if w == y:
                    return dist[w]
                queue.append(w)
    return UNREACHABLE


def bfs_distances(g: Graph, sources: Iterable[int], cap: Optional[int] = None) -> dict[int, int]:
    """Multi-source BFS distances, optionally cut off beyond `cap`."""
    dist = {}
    queue = deque()
    for s in sources:
        g.check_vertex(s)
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if cap is not None and d >= cap:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist
