"""Maximum spanning linear forests.

``pi(h)`` is the largest number of edges of a spanning linear forest of ``h``;
equivalently ``n`` minus the minimum number of vertex-disjoint paths covering
``h``.  Computing it is as hard as deciding traceability, so every routine here
is exact and refuses instances beyond a size limit instead of guessing.

The value is computed per connected component by a subset dynamic program;
witness forests come from an include-first branch-and-bound over the sorted
edge list, which returns the lexicographically smallest maximum forest.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InfeasibleConstraints, InstanceTooLarge
from .graphs import Edge, LinearForest, SimpleGraph


def dp_limit() -> int:
    """Largest component order handled by the subset DP."""
    return int(os.environ.get("LEXHAM_EXACT_LIMIT", "20"))


def sparse_limit() -> int:
    """Largest sparse component order handled by branch-and-bound alone."""
    return int(os.environ.get("LEXHAM_SPARSE_LIMIT", "24"))


@lru_cache(maxsize=8)
def popcount_layers(n: int) -> tuple[np.ndarray, ...]:
    """All masks over ``n`` bits, grouped by popcount."""
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pc += (masks >> b) & 1
    order = np.argsort(pc, kind="stable")
    bounds = np.searchsorted(pc[order], np.arange(n + 2))
    return tuple(order[bounds[p]:bounds[p + 1]] for p in range(n + 1))


def _min_path_cover_dp(adj: list[int]) -> int:
    """Minimum number of paths covering a graph given as adjacency bitmasks.

    For a vertex set M let g(M) be the minimum cover size and ends(M) the set of
    vertices that can close the last path of an optimal cover.  Then
    f(M, u) = g(M - u) + [u has no neighbour in ends(M - u)] and
    g(M) = min_u f(M, u); suboptimal ends are dominated by starting a new path.
    """
    n = len(adj)
    if n == 0:
        return 0
    size = 1 << n
    g = np.zeros(size, dtype=np.int16)
    nb = np.zeros(size, dtype=np.int64)  # neighbourhood of ends(M)
    adj_arr = np.array(adj, dtype=np.int64)
    big = np.int16(n + 1)
    for layer in popcount_layers(n)[1:]:
        vals = np.full((n, len(layer)), big, dtype=np.int16)
        for u in range(n):
            inside = ((layer >> u) & 1).astype(bool)
            pred = layer[inside] ^ (1 << u)
            extendable = ((nb[pred] >> u) & 1).astype(np.int16)
            vals[u, inside] = g[pred] + 1 - extendable
        best = vals.min(axis=0)
        g[layer] = best
        acc = np.zeros(len(layer), dtype=np.int64)
        for u in range(n):
            acc |= np.where(vals[u] == best, adj_arr[u], 0)
        nb[layer] = acc
    return int(g[size - 1])


@dataclass
class _Search:
    """Include-first depth-first search over sorted edges."""

    order: int
    edges: list[Edge]
    cap: list[int]
    best_count: int
    target: int | None
    best: list[Edge] | None = None
    chosen: list[Edge] = field(default_factory=list)

    def run(self) -> None:
        self.deg = [0] * self.order
        self.comp = list(range(self.order))
        self._dfs(0)

    def _root(self, v: int) -> int:
        while self.comp[v] != v:
            v = self.comp[v]
        return v

    def _bound(self, i: int) -> int:
        rem = [0] * self.order
        count = 0
        for u, v in self.edges[i:]:
            if self.deg[u] < self.cap[u] and self.deg[v] < self.cap[v]:
                rem[u] += 1
                rem[v] += 1
                count += 1
        slots = sum(min(self.cap[v] - self.deg[v], rem[v]) for v in range(self.order)) // 2
        return len(self.chosen) + min(count, slots, self.order - 1 - len(self.chosen))

    def _done(self) -> bool:
        if self.best is None:
            return False
        return len(self.best) == self.order - 1 or (
            self.target is not None and len(self.best) >= self.target
        )

    def _dfs(self, i: int) -> None:
        if len(self.chosen) > self.best_count:
            self.best_count = len(self.chosen)
            self.best = list(self.chosen)
            if self._done():
                return
        if i == len(self.edges) or self._bound(i) <= self.best_count:
            return
        u, v = self.edges[i]
        if self.deg[u] < self.cap[u] and self.deg[v] < self.cap[v]:
            ru, rv = self._root(u), self._root(v)
            if ru != rv:
                self.deg[u] += 1
                self.deg[v] += 1
                self.comp[ru] = rv
                self.chosen.append((u, v))
                self._dfs(i + 1)
                self.chosen.pop()
                self.comp[ru] = ru
                self.deg[u] -= 1
                self.deg[v] -= 1
                if self._done():
                    return
        self._dfs(i + 1)


def _component_graphs(h: SimpleGraph) -> list[tuple[list[int], SimpleGraph]]:
    return [(comp, h.induced(comp)) for comp in h.components()]


def _component_pi(sub: SimpleGraph) -> int:
    n = sub.order
    if n <= 2:
        return n - 1
    if n <= dp_limit():
        return n - _min_path_cover_dp(list(sub.adjacency_masks))
    if n <= sparse_limit() and sub.size <= 2 * n:
        return len(_forest_edges(sub, None))
    raise InstanceTooLarge(
        f"component with {n} vertices and {sub.size} edges exceeds the exact-search limit"
    )


def _forest_edges(sub: SimpleGraph, target: int | None) -> list[Edge]:
    search = _Search(
        order=sub.order,
        edges=list(sub.sorted_edges),
        cap=[2] * sub.order,
        best_count=-1 if target is None else target - 1,
        target=target,
    )
    search.run()
    if search.best is None:
        if target is not None:
            raise AssertionError(f"no linear forest with {target} edges found; pi is inconsistent")
        return []
    return search.best


@lru_cache(maxsize=4096)
def pi(h: SimpleGraph) -> int:
    """Maximum number of edges of a spanning linear forest of ``h``."""
    return sum(_component_pi(sub) for _, sub in _component_graphs(h))


@lru_cache(maxsize=4096)
def max_linear_forest(h: SimpleGraph) -> LinearForest:
    """A maximum spanning linear forest; the lexicographically smallest edge set."""
    edges: list[Edge] = []
    for comp, sub in _component_graphs(h):
        target = _component_pi(sub)
        for u, v in _forest_edges(sub, target) if target else []:
            edges.append((comp[u], comp[v]))
    return LinearForest.from_edges(h.order, sorted(edges))


@dataclass(frozen=True)
class ForestConstraints:
    """Requirements on a spanning linear forest used as a loop budget.

    ``terminal_vertices`` must have forest degree at most 1; the two vertices of
    ``separated_pair`` must lie in different components.
    """

    exact_edges: int
    terminal_vertices: frozenset[int] = frozenset()
    separated_pair: tuple[int, int] | None = None

    def __init__(self, exact_edges: int, terminal_vertices=(), separated_pair=None) -> None:
        if exact_edges < 0:
            raise InfeasibleConstraints("exact_edges must be non-negative")
        object.__setattr__(self, "exact_edges", exact_edges)
        object.__setattr__(self, "terminal_vertices", frozenset(terminal_vertices))
        if separated_pair is not None:
            x, y = separated_pair
            if x == y:
                raise InfeasibleConstraints("separated pair must be two distinct vertices")
            separated_pair = (int(x), int(y))
        object.__setattr__(self, "separated_pair", separated_pair)


def _delete_edge(comps: list[list[int]], ci: int, pos: int) -> None:
    """Delete the edge between positions pos and pos+1 of component ci."""
    comp = comps[ci]
    comps[ci:ci + 1] = [comp[:pos + 1], comp[pos + 1:]]


def _locate(comps: list[list[int]], v: int) -> tuple[int, int]:
    for ci, comp in enumerate(comps):
        if v in comp:
            return ci, comp.index(v)
    raise KeyError(v)


def _repair(forest: LinearForest, terminals: frozenset[int], pair: tuple[int, int] | None) -> list[list[int]]:
    comps = [list(c) for c in forest.components]
    # (a) make every terminal an endpoint; cut towards the partner when they share a path
    for t in sorted(terminals):
        ci, pos = _locate(comps, t)
        comp = comps[ci]
        if 0 < pos < len(comp) - 1:
            cut = pos  # default: the edge to the successor
            if pair is not None and t in pair:
                other = pair[1] if pair[0] == t else pair[0]
                if other in comp and comp.index(other) < pos:
                    cut = pos - 1
            _delete_edge(comps, ci, cut)
    # (b) split a component still holding both separated vertices
    if pair is not None:
        x, y = pair
        ci, px = _locate(comps, x)
        if y in comps[ci]:
            py = comps[ci].index(y)
            _delete_edge(comps, ci, px if px < py else px - 1)
    return comps


def forest_budget(h: SimpleGraph, terminals=(), separated_pair=None) -> int:
    """Edges left in the canonical maximum forest after the constraint repairs.

    Any ``exact_edges`` up to this value is accepted by ``constrained_forest``.
    """
    pair = tuple(separated_pair) if separated_pair is not None else None
    comps = _repair(max_linear_forest(h), frozenset(terminals), pair)
    return h.order - len(comps)


def constrained_forest(h: SimpleGraph, c: ForestConstraints) -> LinearForest:
    """Spanning linear forest of ``h`` with exactly ``c.exact_edges`` edges that
    satisfies the terminal and separation constraints.

    Starts from the canonical maximum forest, repairs violated constraints by
    deleting single edges, then trims ends of the longest components.
    """
    for v in c.terminal_vertices | set(c.separated_pair or ()):
        if not 0 <= v < h.order:
            raise InfeasibleConstraints(f"constraint vertex {v} out of range")
    comps = _repair(max_linear_forest(h), c.terminal_vertices, c.separated_pair)
    count = h.order - len(comps)
    if count < c.exact_edges:
        raise InfeasibleConstraints(
            f"only {count} edges survive the constraint repairs, {c.exact_edges} requested"
        )
    while count > c.exact_edges:
        ci = max(range(len(comps)), key=lambda i: (len(comps[i]), -i))
        _delete_edge(comps, ci, len(comps[ci]) - 2)
        count -= 1
    comps.sort(key=min)
    return LinearForest(h.order, tuple(tuple(comp) for comp in comps))
