"""Graphviz output: one ranked cluster per layer, witness edges in bold."""

from __future__ import annotations

from .graphs import ProductWalk, SimpleGraph
from .product import ProductSpec


def _node(layer: int, inner: int) -> str:
    return f'"{layer}:{inner}"'


def product_dot(spec: ProductSpec, walk: ProductWalk | None = None) -> str:
    """Layers drawn side by side with their own edges.

    The complete joins between layers would swamp the picture, so only the
    join edges used by ``walk`` are drawn.
    """
    used = set()
    if walk is not None:
        for p, q in walk.steps():
            used.add(frozenset((tuple(p), tuple(q))))
    lines = ["graph product {", "  rankdir=LR;", "  node [shape=circle, fontsize=10];"]
    for i, h in enumerate(spec.layers, start=1):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="H_{i}"; rank=same;')
        for v in range(h.order):
            lines.append(f"    {_node(i, v)};")
        for u, v in h.sorted_edges:
            bold = frozenset(((i, u), (i, v))) in used
            lines.append(f"    {_node(i, u)} -- {_node(i, v)}" + (" [style=bold, penwidth=3];" if bold else ";"))
        lines.append("  }")
    if walk is not None:
        for p, q in walk.steps():
            if p.layer != q.layer:
                lines.append(f"  {_node(*p)} -- {_node(*q)} [style=bold, penwidth=3, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: SimpleGraph, name: str = "g") -> str:
    body = [f"  {v};" for v in range(g.order)] + [f"  {u} -- {v};" for u, v in g.sorted_edges]
    return "\n".join([f"graph {name} {{", *body, "}"]) + "\n"
