"""Core value types: simple graphs, path multiples, linear forests, product walks.

Path vertices u_1..u_m are 1-indexed; vertices of a layer graph are 0-indexed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph on vertices ``0..order-1``.

    Equality is by the labelled edge set, not by isomorphism.
    """

    order: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if not isinstance(order, int) or order < 1:
            raise GraphError(f"graph order must be a positive integer, got {order!r}")
        normed = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{order - 1}")
            pair = _norm(u, v)
            if pair in normed:
                raise GraphError(f"duplicate edge {pair}")
            normed.add(pair)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(normed))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range 0..{self.order - 1}")

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> SimpleGraph:
        """Subgraph induced by ``vertices``, relabelled to ``0..len-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges if u in index and v in index],
        )

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edge(self, u: int, v: int) -> SimpleGraph:
        return SimpleGraph(self.order, list(self.edges) + [(u, v)])

    # JSON encoding: {"n": order, "edges": [[u, v], ...]} with edges sorted.
    def to_dict(self) -> dict:
        return {"n": self.order, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_dict(cls, data: dict) -> SimpleGraph:
        try:
            return cls(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph object: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self) -> str:
        return f"SimpleGraph({self.order}, {list(self.sorted_edges)})"


def degree(g: SimpleGraph, v: int) -> int:
    """Number of edges of ``g`` incident with ``v``."""
    return len(g.neighbors(v))


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """``g1 + g2``; the vertices of ``g2`` are shifted by ``g1.order``."""
    shift = g1.order
    return SimpleGraph(
        g1.order + g2.order,
        list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges],
    )


# Named families.

def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with centre 0."""
    return SimpleGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class ProductVertex(NamedTuple):
    layer: int  # 1..m
    inner: int  # 0..n-1

    def __str__(self) -> str:
        return f"{self.layer}:{self.inner}"

    @classmethod
    def parse(cls, text: str) -> ProductVertex:
        try:
            layer, inner = text.split(":")
            return cls(int(layer), int(inner))
        except ValueError as exc:
            raise GraphError(f"expected 'layer:inner', got {text!r}") from exc


@dataclass(frozen=True)
class ProductWalk:
    """Sequence of product vertices; ``closed`` means the last joins the first."""

    vertices: tuple[ProductVertex, ...]
    closed: bool

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices", tuple(ProductVertex(int(a), int(b)) for a, b in self.vertices)
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> list[tuple[ProductVertex, ProductVertex]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.closed and len(vs) > 1:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def reversed(self) -> ProductWalk:
        return ProductWalk(tuple(reversed(self.vertices)), self.closed)

    def to_dict(self) -> dict:
        return {"closed": self.closed, "walk": [[v.layer, v.inner] for v in self.vertices]}

    @classmethod
    def from_dict(cls, data: dict) -> ProductWalk:
        try:
            return cls(tuple(ProductVertex(int(a), int(b)) for a, b in data["walk"]), bool(data["closed"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed witness object: {exc}") from exc


@dataclass(frozen=True)
class PathMultigraph:
    """A multiple of the path P_m: edge multiplicities and loop counts.

    ``mult[j-1]`` is the multiplicity of e_j = u_j u_{j+1}; ``loops[i-1]`` is the
    number of loops at u_i.  Zero multiplicities are representable so that
    connectivity can be checked rather than assumed.
    """

    m: int
    mult: tuple[int, ...]
    loops: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mult", tuple(int(x) for x in self.mult))
        object.__setattr__(self, "loops", tuple(int(x) for x in self.loops))
        if self.m < 1:
            raise GraphError("a path multiple needs m >= 1")
        if len(self.mult) != self.m - 1 or len(self.loops) != self.m:
            raise GraphError(
                f"P_{self.m} multiple needs {self.m - 1} multiplicities and {self.m} loop counts"
            )
        if any(x < 0 for x in self.mult + self.loops):
            raise GraphError("multiplicities and loop counts must be non-negative")

    def is_connected(self) -> bool:
        return all(x >= 1 for x in self.mult)

    def degrees(self) -> list[int]:
        return [multigraph_degree(self, i) for i in range(1, self.m + 1)]

    def to_dict(self) -> dict:
        return {"mult": list(self.mult), "loops": list(self.loops)}


def multigraph_degree(gm: PathMultigraph, i: int) -> int:
    """Degree of u_i: incident multiplicities plus two per loop."""
    if not 1 <= i <= gm.m:
        raise GraphError(f"path vertex u_{i} out of range 1..{gm.m}")
    left = gm.mult[i - 2] if i >= 2 else 0
    right = gm.mult[i - 1] if i <= gm.m - 1 else 0
    return left + right + 2 * gm.loops[i - 1]


@dataclass(frozen=True)
class LinearForest:
    """Spanning linear forest of a graph on ``host_order`` vertices.

    Components are vertex sequences; consecutive vertices are joined by a forest edge.
    """

    host_order: int
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        comps = tuple(tuple(int(v) for v in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        seen: set[int] = set()
        for comp in comps:
            if not comp:
                raise GraphError("empty component")
            for v in comp:
                if not 0 <= v < self.host_order:
                    raise GraphError(f"vertex {v} outside host range")
                if v in seen:
                    raise GraphError(f"vertex {v} appears twice")
                seen.add(v)
        if len(seen) != self.host_order:
            missing = sorted(set(range(self.host_order)) - seen)
            raise GraphError(f"components do not cover vertices {missing}")

    @property
    def edge_count(self) -> int:
        return self.host_order - len(self.components)

    def edges(self) -> list[Edge]:
        return sorted(_norm(a, b) for c in self.components for a, b in zip(c, c[1:]))

    def degree(self, v: int) -> int:
        return self.forest_degrees[v]

    @cached_property
    def forest_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.host_order
        for a, b in self.edges():
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    def component_index(self, v: int) -> int:
        for idx, comp in enumerate(self.components):
            if v in comp:
                return idx
        raise GraphError(f"vertex {v} not in forest")

    def is_subgraph_of(self, h: SimpleGraph) -> bool:
        return h.order == self.host_order and all(h.has_edge(a, b) for a, b in self.edges())

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> LinearForest:
        """Build from an edge set that forms a linear forest; components are
        oriented from their smaller endpoint and sorted by smallest vertex."""
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        if any(len(a) > 2 for a in adj):
            raise GraphError("edge set has a vertex of degree > 2")
        seen = [False] * order
        comps = []
        for s in range(order):
            if seen[s] or len(adj[s]) == 2:
                continue
            comp = [s]
            seen[s] = True
            prev, cur = -1, s
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                seen[cur] = True
                comp.append(cur)
            if comp[-1] < comp[0]:
                comp.reverse()
            comps.append(tuple(comp))
        if not all(seen):
            raise GraphError("edge set contains a cycle")
        comps.sort(key=min)
        return cls(order, tuple(comps))

    def to_dict(self) -> dict:
        return {"n": self.host_order, "components": [list(c) for c in self.components]}
