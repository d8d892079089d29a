"""Independent checks for everything the builders emit.

Every function inspects raw structures only and returns a :class:`Report`;
violations carry a reason code and the first failing index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graphs import PathMultigraph, ProductVertex, ProductWalk, SimpleGraph, multigraph_degree
from .product import ProductSpec, build_product

Walk = Union[ProductWalk, Sequence[int]]
Endpoint = Union[ProductVertex, int, None]


@dataclass(frozen=True)
class Report:
    ok: bool
    code: str | None = None
    index: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "code": self.code, "index": self.index, "message": self.message}


OK = Report(True)


def _fail(code: str, index: int | None, message: str) -> Report:
    return Report(False, code, index, message)


def _flat(graph: SimpleGraph | ProductSpec, walk: Walk, n: int | None) -> tuple[SimpleGraph, list[int]] | Report:
    if isinstance(graph, ProductSpec):
        n = graph.n
        graph = build_product(graph)
    if not isinstance(walk, ProductWalk):
        return graph, [int(v) for v in walk]
    if n is None:
        raise ValueError("a layer order n is needed to read product vertices")
    flat = []
    for pos, v in enumerate(walk.vertices):
        if v.layer < 1 or not 0 <= v.inner < n or (v.layer - 1) * n + v.inner >= graph.order:
            return _fail("out-of-range", pos, f"vertex {v} is not a product vertex")
        flat.append((v.layer - 1) * n + v.inner)
    return graph, flat


def _flat_point(p: Endpoint, n: int | None) -> int | None:
    if p is None or isinstance(p, int) and not isinstance(p, ProductVertex):
        return p
    return (p.layer - 1) * n + p.inner


def _spanning(graph: SimpleGraph, flat: list[int], closed: bool) -> Report:
    if len(flat) != graph.order:
        return _fail("length", None, f"walk has {len(flat)} vertices, graph has {graph.order}")
    seen: set[int] = set()
    for pos, v in enumerate(flat):
        if not 0 <= v < graph.order:
            return _fail("out-of-range", pos, f"vertex {v} outside the graph")
        if v in seen:
            return _fail("repeat", pos, f"vertex {v} visited twice")
        seen.add(v)
    pairs = list(zip(flat, flat[1:]))
    if closed:
        pairs.append((flat[-1], flat[0]))
    for pos, (u, v) in enumerate(pairs):
        if not graph.has_edge(u, v):
            return _fail("not-adjacent", pos, f"{u} and {v} are not adjacent")
    return OK


def verify_ham_cycle(graph: SimpleGraph | ProductSpec, walk: Walk, n: int | None = None) -> Report:
    """OK iff ``walk`` is a closed walk through every vertex once along edges."""
    if isinstance(walk, ProductWalk) and not walk.closed:
        return _fail("not-closed", None, "a Hamiltonian cycle must be a closed walk")
    flat = _flat(graph, walk, n)
    if isinstance(flat, Report):
        return flat
    g, vs = flat
    if g.order < 3:
        return _fail("too-small", None, "graphs with fewer than 3 vertices have no cycles")
    return _spanning(g, vs, closed=True)


def verify_ham_path(
    graph: SimpleGraph | ProductSpec,
    walk: Walk,
    x: Endpoint = None,
    y: Endpoint = None,
    n: int | None = None,
) -> Report:
    """OK iff ``walk`` is an open Hamiltonian path, from ``x`` to ``y`` when given."""
    if isinstance(walk, ProductWalk) and walk.closed:
        return _fail("closed", None, "a Hamiltonian path must be an open walk")
    if isinstance(graph, ProductSpec):
        n = graph.n
    flat = _flat(graph, walk, n)
    if isinstance(flat, Report):
        return flat
    g, vs = flat
    report = _spanning(g, vs, closed=False)
    if not report:
        return report
    fx, fy = _flat_point(x, n), _flat_point(y, n)
    if fx is not None and vs[0] != fx:
        return _fail("start", 0, f"walk starts at {walk_label(walk, 0)}, expected {x}")
    if fy is not None and vs[-1] != fy:
        return _fail("end", len(vs) - 1, f"walk ends at {walk_label(walk, -1)}, expected {y}")
    return OK


def walk_label(walk: Walk, pos: int) -> str:
    v = walk.vertices[pos] if isinstance(walk, ProductWalk) else walk[pos]
    return str(v)


def verify_edge_profile(walk: ProductWalk, gm: PathMultigraph) -> Report:
    """OK iff the walk uses exactly mult[j] edges between layers j and j+1 and
    exactly loops[i] edges inside layer i."""
    crossing = [0] * (gm.m - 1)
    inside = [0] * gm.m
    for pos, (p, q) in enumerate(walk.steps()):
        if not (1 <= p.layer <= gm.m and 1 <= q.layer <= gm.m):
            return _fail("layer-range", pos, f"step {p} -> {q} leaves layers 1..{gm.m}")
        gap = abs(p.layer - q.layer)
        if gap == 0:
            inside[p.layer - 1] += 1
        elif gap == 1:
            crossing[min(p.layer, q.layer) - 1] += 1
        else:
            return _fail("layer-jump", pos, f"step {p} -> {q} skips a layer")
    for j, (got, want) in enumerate(zip(crossing, gm.mult), start=1):
        if got != want:
            return _fail("crossing-count", j, f"{got} edges between layers {j} and {j + 1}, expected {want}")
    for i, (got, want) in enumerate(zip(inside, gm.loops), start=1):
        if got != want:
            return _fail("layer-count", i, f"{got} edges inside layer {i}, expected {want}")
    return OK


def verify_multiple(gm: PathMultigraph, n: int, profile: str | tuple = "cycle") -> Report:
    """OK iff ``gm`` is connected and has the degree profile of ``profile``:
    ``"cycle"`` (2n everywhere) or ``("open", a, b)`` (2n - 1 at a != b,
    2n - 2 at a = b, 2n elsewhere)."""
    for j, x in enumerate(gm.mult, start=1):
        if x < 1:
            return _fail("disconnected", j, f"edge e_{j} has multiplicity {x}")
    expected = [2 * n] * gm.m
    if profile != "cycle":
        kind, a, b = profile
        if kind not in ("open", "path") or not (1 <= a <= gm.m and 1 <= b <= gm.m):
            raise ValueError(f"bad profile {profile!r}")
        expected[a - 1] -= 1
        expected[b - 1] -= 1
    bad = [i for i in range(1, gm.m + 1) if multigraph_degree(gm, i) != expected[i - 1]]
    if bad:
        detail = ", ".join(f"u_{i}: {multigraph_degree(gm, i)} != {expected[i - 1]}" for i in bad)
        return _fail("degree", bad[0], detail)
    return OK
