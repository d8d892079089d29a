"""Generalized lexicographic product P_m[H_1, ..., H_m].

Layer i (1-indexed) is a copy of H_i; consecutive layers are completely joined.
Product vertex (i, h) has flat index (i - 1) * n + h.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError
from .graphs import ProductVertex, SimpleGraph


@dataclass(frozen=True)
class ProductSpec:
    m: int
    layers: tuple[SimpleGraph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "layers", tuple(self.layers))
        if self.m < 1:
            raise GraphError("the path needs at least one vertex")
        if len(self.layers) != self.m:
            raise GraphError(f"expected {self.m} layers, got {len(self.layers)}")
        orders = {h.order for h in self.layers}
        if len(orders) != 1:
            raise GraphError(f"layers must have equal order, got {sorted(orders)}")

    @property
    def n(self) -> int:
        return self.layers[0].order

    @property
    def order(self) -> int:
        return self.m * self.n

    @classmethod
    def uniform(cls, m: int, layer: SimpleGraph) -> ProductSpec:
        return cls(m, (layer,) * m)

    def layer(self, i: int) -> SimpleGraph:
        """H_i for 1 <= i <= m."""
        if not 1 <= i <= self.m:
            raise GraphError(f"layer {i} out of range 1..{self.m}")
        return self.layers[i - 1]

    def contains(self, v: ProductVertex) -> bool:
        return 1 <= v.layer <= self.m and 0 <= v.inner < self.n

    def adjacent(self, p: ProductVertex, q: ProductVertex) -> bool:
        if abs(p.layer - q.layer) == 1:
            return True
        return p.layer == q.layer and self.layer(p.layer).has_edge(p.inner, q.inner)

    def to_dict(self) -> dict:
        if all(h == self.layers[0] for h in self.layers):
            return {"m": self.m, "layer": self.layers[0].to_dict()}
        return {"m": self.m, "layers": [h.to_dict() for h in self.layers]}

    @classmethod
    def from_dict(cls, data: dict) -> ProductSpec:
        try:
            m = int(data["m"])
            if "layers" in data:
                layers = [SimpleGraph.from_dict(g) for g in data["layers"]]
            else:
                layers = [SimpleGraph.from_dict(data["layer"])] * m
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed product spec: {exc}") from exc
        return cls(m, tuple(layers))


def flatten(i: int, h: int, n: int, m: int | None = None) -> int:
    if n < 1 or i < 1 or not 0 <= h < n or (m is not None and i > m):
        raise GraphError(f"product vertex ({i}, {h}) out of range for n={n}")
    return (i - 1) * n + h


def unflatten(idx: int, n: int, m: int | None = None) -> ProductVertex:
    if n < 1 or idx < 0 or (m is not None and idx >= m * n):
        raise GraphError(f"flat index {idx} out of range")
    return ProductVertex(idx // n + 1, idx % n)


def build_product(spec: ProductSpec) -> SimpleGraph:
    n, m = spec.n, spec.m
    edges = []
    for i, h in enumerate(spec.layers, start=1):
        base = (i - 1) * n
        edges.extend((base + u, base + v) for u, v in h.edges)
        if i < m:
            edges.extend((base + a, base + n + b) for a in range(n) for b in range(n))
    return SimpleGraph(m * n, edges)


def layers_from(graphs: Sequence[SimpleGraph]) -> ProductSpec:
    return ProductSpec(len(graphs), tuple(graphs))
