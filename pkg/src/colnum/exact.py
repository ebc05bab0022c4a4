"""Brute-force oracles: optimal orderings for scol/wcol/adm, independent
treewidth and treedepth computations, and the smallest-last heuristic.

Strong reachability and admissibility admit an exact dynamic program over
vertex subsets: once the suffix of sigma-larger vertices is fixed as a set,
the reach size of the next vertex placed from the back is determined.  Weak
reachability has no such decomposition, so it is handled by branch and
bound over prefixes with dominance memoization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, Ordering
from .reach import (
    ADM,
    STRONG,
    WEAK,
    effective_radius,
    max_path_packing,
    reach_report,
)

DEFAULT_CAP = 10


class CapExceededError(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(
            f"graph has {n} vertices, exact search cap is {cap}; "
            f"raise the cap or use a heuristic ordering"
        )
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class ExactResult:
    kind: str
    r: object
    value: int
    witness: Ordering
    explored: int

    def to_json(self) -> dict:
        from .reach import INFINITY

        return {
            "kind": self.kind,
            "r": "inf" if self.r == INFINITY else self.r,
            "value": self.value,
            "witness": list(self.witness.position),
            "explored": self.explored,
        }


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _neighbors_mask(adj, mask: int) -> int:
    nb = 0
    for v in _bits(mask):
        nb |= adj[v]
    return nb


def exact_min(g: Graph, r, kind: str, cap: int = DEFAULT_CAP,
              budget: int = 100_000) -> ExactResult:
    """Minimum of the per-ordering value over all orderings, with witness."""
    if g.n > cap:
        raise CapExceededError(g.n, cap)
    if g.n == 0:
        return ExactResult(kind, r, 0, Ordering([]), 0)
    if kind == WEAK:
        value, witness, explored = _exact_weak(g, r)
    elif kind in (STRONG, ADM):
        value, witness, explored = _exact_backward(g, r, kind, budget)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return ExactResult(kind, r, value, witness, explored)


# -- strong / admissibility: subset DP from the back -------------------------

def _exact_backward(g: Graph, r, kind: str, budget: int):
    n = g.n
    rr = effective_radius(r, n)
    adj = _adj_masks(g)
    full = (1 << n) - 1

    def cost_strong(x, unplaced):
        placed = full & ~unplaced  # vertices already fixed sigma-after x
        seen = cur = 1 << x
        ends = 0
        for _ in range(rr):
            nb = _neighbors_mask(adj, cur)
            ends |= nb & unplaced & ~(1 << x)
            cur = nb & placed & ~seen
            if not cur:
                break
            seen |= cur
        return 1 + bin(ends).count("1")

    def cost_adm(x, unplaced):
        placed = full & ~unplaced
        b = max_path_packing(
            g, x, rr,
            internal_ok=lambda v: (placed >> v) & 1,
            end_ok=lambda v: v != x and (unplaced >> v) & 1,
            budget=budget,
        )
        return b + 1

    cost = cost_strong if kind == STRONG else cost_adm

    value = [0] * (full + 1)
    choice = [-1] * (full + 1)
    for s in range(1, full + 1):
        best = None
        best_x = -1
        for x in _bits(s):
            c = max(cost(x, s), value[s ^ (1 << x)])
            if best is None or c < best:
                best, best_x = c, x
        value[s] = best
        choice[s] = best_x

    position = [0] * n
    s = full
    while s:
        x = choice[s]
        position[bin(s).count("1") - 1] = x
        s ^= 1 << x
    return value[full], Ordering(position), full


# -- weak: branch and bound over prefixes ------------------------------------

def _exact_weak(g: Graph, r):
    n = g.n
    rr = effective_radius(r, n)
    adj = _adj_masks(g)
    full = (1 << n) - 1

    def contrib(y, remaining):
        # vertices of `remaining` within rr steps of y inside G[remaining]
        seen = cur = 1 << y
        for _ in range(rr):
            nxt = _neighbors_mask(adj, cur) & remaining & ~seen
            if not nxt:
                break
            seen |= nxt
            cur = nxt
        return seen

    def evaluate(order):
        counts = [0] * n
        remaining = full
        worst = 0
        for y in order:
            c = contrib(y, remaining)
            for x in _bits(c):
                counts[x] += 1
            worst = max(worst, counts[y])
            remaining ^= 1 << y
        return worst

    def greedy():
        counts = [0] * n
        remaining = full
        order = []
        while remaining:
            best = None
            for y in _bits(remaining):
                c = contrib(y, remaining)
                # rank moves by the value y freezes at, then by spread
                key = (counts[y] + 1, bin(c).count("1"))
                if best is None or key < best[0]:
                    best = (key, y, c)
            _, y, c = best
            for x in _bits(c):
                counts[x] += 1
            order.append(y)
            remaining ^= 1 << y
        return order

    candidates = [list(degeneracy_ordering(g).position), greedy(),
                  list(range(n))]
    best_val = None
    best_order = None
    for order in candidates:
        v = evaluate(order)
        if best_val is None or v < best_val:
            best_val, best_order = v, list(order)

    # scol_r(G) is a valid global lower bound on wcol_r(G) and is cheap
    lower = _exact_backward_strong_value(g, rr, adj, full)

    explored = 0
    memo: dict[int, list] = {}

    def search(placed, counts, maxp, prefix):
        nonlocal best_val, best_order, explored
        if best_val == lower:
            return
        explored += 1
        remaining = full & ~placed
        if not remaining:
            if maxp < best_val:
                best_val, best_order = maxp, list(prefix)
            return
        key_counts = tuple(counts[x] for x in _bits(remaining))
        bucket = memo.setdefault(placed, [])
        for m2, c2 in bucket:
            if m2 <= maxp and all(a <= b for a, b in zip(c2, key_counts)):
                return
        bucket.append((maxp, key_counts))

        moves = []
        for y in _bits(remaining):
            c = contrib(y, remaining)
            new_y = counts[y] + 1
            new_maxp = max(maxp, new_y)
            if new_maxp >= best_val:
                continue
            lb = new_maxp
            rest = remaining ^ (1 << y)
            for x in _bits(rest):
                cx = counts[x] + ((c >> x) & 1) + 1
                if cx > lb:
                    lb = cx
            if lb >= best_val:
                continue
            moves.append((new_maxp, bin(c).count("1"), y, c))
        moves.sort()
        for new_maxp, _, y, c in moves:
            if new_maxp >= best_val:
                continue
            new_counts = list(counts)
            for x in _bits(c):
                new_counts[x] += 1
            prefix.append(y)
            search(placed | (1 << y), new_counts, max(maxp, new_counts[y]),
                   prefix)
            prefix.pop()
            if best_val == lower:
                return

    if best_val > lower:
        search(0, [0] * n, 0, [])
    return best_val, Ordering(best_order), explored


def _exact_backward_strong_value(g, rr, adj, full):
    # scol value only (lower bound for wcol at the same radius)
    n = g.n
    value = [0] * (full + 1)
    for s in range(1, full + 1):
        best = None
        for x in _bits(s):
            placed = full & ~s
            seen = cur = 1 << x
            ends = 0
            for _ in range(rr):
                nb = _neighbors_mask(adj, cur)
                ends |= nb & s & ~(1 << x)
                cur = nb & placed & ~seen
                if not cur:
                    break
                seen |= cur
            c = max(1 + bin(ends).count("1"), value[s ^ (1 << x)])
            if best is None or c < best:
                best = c
        value[s] = best
    return value[full]


def exact_min_enumerate(g: Graph, r, kind: str,
                        budget: int = 100_000) -> ExactResult:
    """Unpruned enumeration over all n! orderings (test reference)."""
    best = None
    best_sigma = None
    count = 0
    for perm in itertools.permutations(range(g.n)):
        sigma = Ordering(perm)
        count += 1
        v = reach_report(g, sigma, r, kind, budget).value
        if best is None or v < best:
            best, best_sigma = v, sigma
    return ExactResult(kind, r, best or 0, best_sigma or Ordering([]), count)


# -- independent width oracles ------------------------------------------------

def treewidth_oracle(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Treewidth via elimination orderings over vertex subsets.

    tw(S) = min over the vertex v of S eliminated last of
    max(tw(S - v), back-degree of v), where the back-degree is the number
    of vertices outside S reachable from v through S - v (fill-in edges).
    Computed independently of scol.
    """
    if g.n > cap:
        raise CapExceededError(g.n, cap)
    if g.n == 0:
        return 0
    n = g.n
    adj = _adj_masks(g)
    full = (1 << n) - 1
    tw = [0] * (full + 1)
    for s in range(1, full + 1):
        best = None
        for v in _bits(s):
            s2 = s ^ (1 << v)
            # vertices outside s reachable from v via internals in s2
            seen = cur = 1 << v
            out = 0
            while cur:
                nb = _neighbors_mask(adj, cur)
                out |= nb & ~s
                cur = nb & s2 & ~seen
                seen |= cur
            c = max(tw[s2], bin(out).count("1"))
            if best is None or c < best:
                best = c
        tw[s] = best
    return tw[full]


def treedepth_oracle(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact treedepth: td(G) = max over components; for connected G,
    td = 1 + min over v of td(G - v); td(K1) = 1.  Memoized over subsets."""
    if g.n > cap:
        raise CapExceededError(g.n, cap)
    if g.n == 0:
        return 0
    adj = _adj_masks(g)
    memo: dict[int, int] = {0: 0}

    def components(mask):
        comps = []
        left = mask
        while left:
            start = left & -left
            comp = start
            frontier = start
            while frontier:
                frontier = _neighbors_mask(adj, frontier) & mask & ~comp
                comp |= frontier
            comps.append(comp)
            left &= ~comp
        return comps

    def td(mask):
        if mask in memo:
            return memo[mask]
        comps = components(mask)
        if len(comps) > 1:
            val = max(td(c) for c in comps)
        elif mask & (mask - 1) == 0:
            val = 1
        else:
            val = 1 + min(td(mask ^ (1 << v)) for v in _bits(mask))
        memo[mask] = val
        return val

    return td((1 << g.n) - 1)


def degeneracy_ordering(g: Graph) -> Ordering:
    """Smallest-last ordering: repeatedly remove a minimum-degree vertex
    (ties by smallest id) and place it last among the unplaced."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    position = [0] * n
    for slot in range(n - 1, -1, -1):
        v = min(
            (u for u in range(n) if alive[u]),
            key=lambda u: (deg[u], u),
        )
        position[slot] = v
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return Ordering(position)
