"""Seeded randomness and random test-corpus generation.

All randomness derives from one 64-bit seed through counter-based Philox
streams; a (seed, stream...) pair always yields the same draws, on any
platform.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, Ordering


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Independent deterministic stream for (seed, *stream)."""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(seed, spawn_key=stream))
    )


def random_ordering(rng: np.random.Generator, n: int) -> Ordering:
    return Ordering([int(v) for v in rng.permutation(n)])


def random_graph(rng: np.random.Generator, n: int, m: int) -> Graph:
    """Uniform simple graph with exactly m edges."""
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if m > len(all_edges):
        raise ValueError(f"m={m} exceeds the {len(all_edges)} possible edges")
    idx = rng.choice(len(all_edges), size=m, replace=False)
    return Graph(n, [all_edges[int(i)] for i in idx])


def random_sparse_graph(rng: np.random.Generator, n: int,
                        extra: int = 4) -> Graph:
    """Random graph with m between n-1 and n-1+extra edges (or fewer if the
    graph is tiny)."""
    max_m = n * (n - 1) // 2
    lo = min(n - 1, max_m)
    hi = min(lo + extra, max_m)
    m = int(rng.integers(lo, hi + 1))
    return random_graph(rng, n, m)
