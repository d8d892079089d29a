"""Brute-force ground truth for small graphs.

Nothing here uses the closed-form rules or the linear-forest DP.  Existence
questions first try a seeded rotation-extension search and a budgeted
backtracking search; when both give up, a Held-Karp reachability table over all vertex subsets settles the answer
exactly.  The table is the only way non-existence is certified, so it is
capped by ``LEXHAM_ORACLE_LIMIT`` vertices.
"""

from __future__ import annotations

import os
import random
from typing import Iterable

import numpy as np

from .errors import InstanceTooLarge
from .forest import popcount_layers
from .graphs import SimpleGraph
from .product import ProductSpec, build_product


def certify_limit() -> int:
    """Largest order for which non-existence is certified."""
    return int(os.environ.get("LEXHAM_ORACLE_LIMIT", "22"))


def connected_limit() -> int:
    """Largest order for the all-pairs hamiltonian-connectivity check."""
    return int(os.environ.get("LEXHAM_ORACLE_PAIRS_LIMIT", "16"))


BACKTRACK_BUDGET = 20_000  # used when the table cannot be afforded
PRE_TABLE_BUDGET = 1_000
ROTATION_STEPS_PER_VERTEX = 40
ROTATION_RESTARTS = 4


# --------------------------------------------------------------------------
# pi by enumeration of edge subsets

def brute_pi(h: SimpleGraph) -> int:
    """Largest edge subset with maximum degree 2 and no cycle, by exhaustion."""
    if h.order > 12 and h.size > 24:
        raise InstanceTooLarge(f"brute_pi needs n <= 12 or |E| <= 24, got n={h.order}, |E|={h.size}")
    edges = list(h.sorted_edges)
    deg = [0] * h.order
    best = 0

    def creates_cycle(chosen: list[tuple[int, int]], u: int, v: int) -> bool:
        adj: dict[int, list[int]] = {}
        for a, b in chosen:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        stack, seen = [u], {u}
        while stack:
            w = stack.pop()
            if w == v:
                return True
            for z in adj.get(w, ()):
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return False

    def walk(i: int, chosen: list[tuple[int, int]]) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if i == len(edges) or len(chosen) + len(edges) - i <= best:
            return
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2 and not creates_cycle(chosen, u, v):
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            walk(i + 1, chosen)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        walk(i + 1, chosen)

    walk(0, [])
    return best


# --------------------------------------------------------------------------
# Held-Karp reachability

def _reach_table(adj: tuple[int, ...], starts: Iterable[int]) -> np.ndarray:
    """dp[M] = set of v such that some path through exactly M starts in
    ``starts`` and ends at v, as a bitmask."""
    n = len(adj)
    if n > certify_limit():
        raise InstanceTooLarge(f"{n} vertices exceed the certification limit {certify_limit()}")
    dp = np.zeros(1 << n, dtype=np.uint32)
    for s in starts:
        dp[1 << s] = 1 << s
    adj_arr = [np.uint32(a) for a in adj]
    for layer in popcount_layers(n)[2:]:
        acc = np.zeros(len(layer), dtype=np.uint32)
        for u in range(n):
            inside = ((layer >> u) & 1).astype(bool)
            pred = layer[inside] ^ (1 << u)
            hit = (dp[pred] & adj_arr[u]) != 0
            acc[inside] |= np.where(hit, np.uint32(1 << u), np.uint32(0))
        dp[layer] = acc
    return dp


def _full_ends(adj: tuple[int, ...], starts: Iterable[int]) -> int:
    n = len(adj)
    return int(_reach_table(adj, starts)[(1 << n) - 1])


# --------------------------------------------------------------------------
# budgeted backtracking

class _Budget(Exception):
    pass


def _backtrack(adj: tuple[int, ...], start: int, end: int | None, cycle: bool, budget: int) -> bool | None:
    """Depth-first extension of a path from ``start``, neighbours with the
    fewest free neighbours first.  Returns None when the budget runs out."""
    n = len(adj)
    full = (1 << n) - 1
    nodes = 0

    def free_degree(v: int, free: int) -> int:
        return bin(adj[v] & free).count("1")

    def hopeless(cur: int, free: int) -> bool:
        # every free vertex needs two usable neighbours, except a free path end
        usable = free | (1 << cur)
        if cycle:
            usable |= 1 << start
        loose = 0
        rest = free
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = bin(adj[v] & usable).count("1")
            if d == 0:
                return True
            if d == 1 and v != end:
                loose += 1
                if loose > (0 if cycle or end is not None else 1):
                    return True
        # the free vertices together with cur must stay connected
        seen, frontier = 1 << cur, 1 << cur
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow = adj[low.bit_length() - 1] & free & ~seen
            seen |= grow
            frontier |= grow
        return (seen & free) != free

    def extend(cur: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if visited == full:
            if cycle:
                return bool(adj[cur] >> start & 1)
            return end is None or cur == end
        free = full & ~visited
        if end is not None and cur == end:
            return False
        if hopeless(cur, free):
            return False
        options = [w for w in range(n) if adj[cur] >> w & 1 and free >> w & 1]
        if end is not None and len(options) > 1:
            options = [w for w in options if w != end or visited | (1 << w) == full]
        options.sort(key=lambda w: (free_degree(w, free), w))
        return any(extend(w, visited | (1 << w)) for w in options)

    try:
        return extend(start, 1 << start)
    except _Budget:
        return None
    except RecursionError:
        return None


# --------------------------------------------------------------------------
# rotation-extension (only ever proves existence)

def _rotation_search(adj: tuple[int, ...], start: int | None, end: int | None, cycle: bool) -> bool:
    """Randomized extend-or-rotate search with a fixed seed.

    The path grows at its tail; when the tail has no free neighbour, an edge
    from the tail back into the path is used to reverse a suffix.  ``start``
    pins the head, ``end`` is held back until it is the last vertex missing.
    """
    n = len(adj)
    nbrs = [[w for w in range(n) if adj[v] >> w & 1] for v in range(n)]
    rng = random.Random(0x1E5)
    for _ in range(ROTATION_RESTARTS):
        head = start if start is not None else rng.randrange(n)
        if head == end:
            return False
        path, pos = [head], {head: 0}
        for _ in range(ROTATION_STEPS_PER_VERTEX * n):
            tail = path[-1]
            if len(path) == n:
                if cycle and path[0] in nbrs[tail]:
                    return True
                if not cycle and (end is None or tail == end):
                    return True
            grow = [w for w in nbrs[tail] if w not in pos and (w != end or len(path) == n - 1)]
            if grow:
                w = rng.choice(grow)
                pos[w] = len(path)
                path.append(w)
                continue
            pivots = [w for w in nbrs[tail] if pos.get(w, n) < len(path) - 2]
            if not pivots:
                if start is not None:
                    break
                path.reverse()
                pos = {v: i for i, v in enumerate(path)}
                continue
            i = pos[rng.choice(pivots)]
            path[i + 1:] = path[:i:-1]
            for j in range(i + 1, len(path)):
                pos[path[j]] = j
    return False


# --------------------------------------------------------------------------
# public predicates

def _budget(order: int, budget: int | None) -> int:
    if budget is not None:
        return budget
    return PRE_TABLE_BUDGET if order <= certify_limit() else BACKTRACK_BUDGET


def brute_hamiltonian(g: SimpleGraph, budget: int | None = None) -> bool:
    """Does ``g`` contain a Hamiltonian cycle?"""
    if g.order < 3:
        return False
    adj = g.adjacency_masks
    if _rotation_search(adj, None, None, True):
        return True
    found = _backtrack(adj, 0, None, True, _budget(g.order, budget))
    if found is not None:
        return found
    return bool(_full_ends(adj, [0]) & adj[0])


def brute_traceable(g: SimpleGraph, budget: int | None = None) -> bool:
    """Does ``g`` contain a Hamiltonian path?"""
    if g.order == 1:
        return True
    adj = g.adjacency_masks
    if _rotation_search(adj, None, None, False):
        return True
    per_start = max(1, _budget(g.order, budget) // g.order)
    undecided = False
    for s in range(g.order):
        found = _backtrack(adj, s, None, False, per_start)
        if found:
            return True
        undecided |= found is None
    if not undecided:
        return False
    return _full_ends(adj, range(g.order)) != 0


def brute_ham_path(g: SimpleGraph, x: int, y: int, budget: int | None = None) -> bool:
    """Is there a Hamiltonian path from ``x`` to ``y``?"""
    if x == y:
        return g.order == 1
    adj = g.adjacency_masks
    if _rotation_search(adj, x, y, False):
        return True
    found = _backtrack(adj, x, y, False, _budget(g.order, budget))
    if found is not None:
        return found
    return bool(_full_ends(adj, [x]) >> y & 1)


def brute_ham_connected(g: SimpleGraph) -> bool:
    """Is every pair of distinct vertices joined by a Hamiltonian path?"""
    n = g.order
    if n > connected_limit():
        raise InstanceTooLarge(f"all-pairs search limited to {connected_limit()} vertices, got {n}")
    if n == 1:
        return True
    adj = g.adjacency_masks
    full = (1 << n) - 1
    for x in range(n - 1):
        want = full & ~((1 << (x + 1)) - 1)
        if _full_ends(adj, [x]) & want != want:
            return False
    return True


def failing_pair(g: SimpleGraph) -> tuple[int, int] | None:
    """First pair (x, y), x < y, with no Hamiltonian x-y path, if any."""
    n = g.order
    if n > connected_limit():
        raise InstanceTooLarge(f"all-pairs search limited to {connected_limit()} vertices, got {n}")
    adj = g.adjacency_masks
    for x in range(n - 1):
        ends = _full_ends(adj, [x])
        for y in range(x + 1, n):
            if not ends >> y & 1:
                return x, y
    return None


ORACLES = {
    "hamiltonian": brute_hamiltonian,
    "traceable": brute_traceable,
    "ham_connected": brute_ham_connected,
}


def oracle_report(spec: ProductSpec, prop: str) -> dict:
    """Exhaustive-search verdict in the same shape as a decision."""
    from .decide import normalize_property

    key = normalize_property(prop)
    g = build_product(spec)
    verdict = ORACLES[key](g)
    return {
        "verdict": verdict,
        "ledger": [
            {
                "condition": f"exhaustive {key} search on {g.order} vertices",
                "required": True,
                "actual": verdict,
                "satisfied": verdict,
            }
        ],
        "citation": "oracle: backtracking with Held-Karp certification",
    }
