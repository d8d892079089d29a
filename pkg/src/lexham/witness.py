"""Explicit Hamiltonian cycles and paths in P_m[H_1, ..., H_m].

A witness is produced in three steps: a multiple of the path fixes how often
each pair of consecutive layers is crossed and how many edges are used inside
each layer; an Euler trail of the multiple orders the visits to the layers;
each visit to layer i is then replaced by one path of a spanning linear
forest of H_i.  Complete joins make every such concatenation a walk of the
product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .decide import Decision, decide_ham_connected, decide_hamiltonian, decide_traceable
from .errors import AssemblyError, GraphError, InfeasibleBudget, InfeasibleConstraints, ParityError
from .forest import ForestConstraints, constrained_forest, forest_budget, pi
from .graphs import LinearForest, PathMultigraph, ProductVertex, ProductWalk
from .multiple import (
    build_cycle_multiple_odd,
    build_even_cycle_multiple,
    build_even_hamcon_multiple,
    build_join_cycle_multiple,
    build_lemma_multiple,
    lemma_case,
    lemma_requirements,
    plan_loops,
)
from .product import ProductSpec
from .verify import verify_edge_profile, verify_ham_cycle, verify_ham_path

Goal = Literal["cycle", "path", "xy-path"]
GOALS: tuple[Goal, ...] = ("cycle", "path", "xy-path")


@dataclass(frozen=True)
class EulerTrail:
    """Layer indices of an Euler trail of a path multiple.

    A closed trail lists its start once; the return edge is implicit.
    """

    vertices: tuple[int, ...]
    closed: bool

    def edge_counts(self, m: int) -> list[int]:
        counts = [0] * (m - 1)
        steps = list(zip(self.vertices, self.vertices[1:]))
        if self.closed and len(self.vertices) > 1:
            steps.append((self.vertices[-1], self.vertices[0]))
        for p, q in steps:
            if abs(p - q) != 1:
                raise GraphError(f"trail step u_{p} -> u_{q} is not a path edge")
            counts[min(p, q) - 1] += 1
        return counts

    def opened(self) -> EulerTrail:
        """The closed trail read as an open one that returns to its start."""
        if not self.closed:
            return self
        return EulerTrail(self.vertices + self.vertices[:1], False)


def euler_trail(gm: PathMultigraph, start: int | None = None, end: int | None = None) -> EulerTrail:
    """Hierholzer's algorithm on the loopless part of ``gm``.

    At every vertex the edge towards the lower index is taken first, so the
    result is fully determined by ``gm`` and the start.
    """
    m = gm.m
    if not gm.is_connected():
        raise GraphError(f"multiple with multiplicities {list(gm.mult)} is disconnected")
    for v in (start, end):
        if v is not None and not 1 <= v <= m:
            raise ParityError(f"trail endpoint u_{v} outside 1..{m}")
    deg = [(gm.mult[i - 2] if i > 1 else 0) + (gm.mult[i - 1] if i < m else 0) for i in range(1, m + 1)]
    odd = [i for i in range(1, m + 1) if deg[i - 1] % 2]
    if not odd:
        if start is not None and end is not None and start != end:
            raise ParityError("all degrees are even, so the trail must be closed")
        start = start or end or 1
    elif len(odd) == 2:
        if {start, end} - {None} - set(odd):
            raise ParityError(f"an open trail must run between u_{odd[0]} and u_{odd[1]}")
        if start is None:
            start = odd[1] if end == odd[0] else odd[0]
    else:
        raise ParityError(f"{len(odd)} vertices of odd degree; no Euler trail exists")

    remaining = list(gm.mult)
    stack, circuit = [start], []
    while stack:
        v = stack[-1]
        if v > 1 and remaining[v - 2]:
            remaining[v - 2] -= 1
            stack.append(v - 1)
        elif v < m and remaining[v - 1]:
            remaining[v - 1] -= 1
            stack.append(v + 1)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if not odd:
        return EulerTrail(tuple(circuit[:-1]) if m > 1 else (start,), True)
    return EulerTrail(tuple(circuit), False)


def occurrence_counts(trail: EulerTrail, m: int | None = None) -> list[int]:
    """How many times each u_i appears in the trail (1-based layers, list index i-1)."""
    m = m or max(trail.vertices)
    counts = [0] * m
    for v in trail.vertices:
        counts[v - 1] += 1
    return counts


def _orient(comp: Sequence[int], first: int | None = None, last: int | None = None) -> list[int]:
    comp = list(comp)
    if first is not None:
        return comp if comp[0] == first else comp[::-1]
    if last is not None:
        return comp if comp[-1] == last else comp[::-1]
    return comp if comp[0] <= comp[-1] else comp[::-1]


def assemble(
    trail: EulerTrail,
    forests: Sequence[LinearForest],
    x: ProductVertex | None = None,
    y: ProductVertex | None = None,
) -> ProductWalk:
    """Replace the t-th visit of u_i by the t-th path of the forest on layer i.

    Paths are taken in order of their smallest vertex, except that the path
    holding ``x`` goes to the first visit of its layer and the one holding
    ``y`` to the last visit of its layer.
    """
    m = len(forests)
    occ = occurrence_counts(trail, m)
    queues = []
    for i, forest in enumerate(forests, start=1):
        if len(forest.components) != occ[i - 1]:
            raise AssemblyError(
                f"layer {i}: forest has {len(forest.components)} paths, trail visits it {occ[i - 1]} times"
            )
        queues.append(sorted(forest.components, key=min))
    pinned: dict[str, tuple[int, tuple[int, ...]]] = {}
    for name, p in (("x", x), ("y", y)):
        if p is None:
            continue
        comp = next(c for c in queues[p.layer - 1] if p.inner in c)
        if p.inner not in (comp[0], comp[-1]):
            raise AssemblyError(f"{name}={p} is an inner vertex of its path")
        pinned[name] = (p.layer, comp)
    if x is not None and y is not None and x.layer == y.layer and pinned["x"][1] == pinned["y"][1]:
        raise AssemblyError("x and y lie on the same path of their layer")
    if x is not None:
        if trail.vertices[0] != x.layer:
            raise AssemblyError(f"trail starts at u_{trail.vertices[0]}, x lies in layer {x.layer}")
        q = queues[x.layer - 1]
        q.insert(0, q.pop(q.index(pinned["x"][1])))
    if y is not None:
        if trail.vertices[-1] != y.layer:
            raise AssemblyError(f"trail ends at u_{trail.vertices[-1]}, y lies in layer {y.layer}")
        q = queues[y.layer - 1]
        q.append(q.pop(q.index(pinned["y"][1])))

    taken = [0] * m
    walk: list[ProductVertex] = []
    for layer in trail.vertices:
        comp = queues[layer - 1][taken[layer - 1]]
        taken[layer - 1] += 1
        if x is not None and layer == x.layer and comp == pinned["x"][1]:
            inner = _orient(comp, first=x.inner)
        elif y is not None and layer == y.layer and comp == pinned["y"][1]:
            inner = _orient(comp, last=y.inner)
        else:
            inner = _orient(comp)
        walk.extend(ProductVertex(layer, h) for h in inner)
    return ProductWalk(tuple(walk), trail.closed)


def zigzag_path(spec: ProductSpec) -> tuple[ProductWalk, PathMultigraph]:
    """Hamiltonian path of an even path product that never uses a layer edge.

    Layers 2i-1 and 2i are interleaved vertex by vertex; the last vertex of
    layer 2i is joined to the first vertex of layer 2i+1.
    """
    m, n = spec.m, spec.n
    if m % 2:
        raise ParityError("the zigzag needs an even number of layers")
    walk = []
    for i in range(1, m, 2):
        for h in range(n):
            walk += [ProductVertex(i, h), ProductVertex(i + 1, h)]
    mult = [2 * n - 1 if j % 2 else 1 for j in range(1, m)]
    return ProductWalk(tuple(walk), False), PathMultigraph(m, tuple(mult), (0,) * m)


@dataclass(frozen=True)
class Construction:
    """Outcome of :func:`construct`: a verified walk, or the reason there is none."""

    goal: Goal
    decision: Decision
    walk: ProductWalk | None = None
    multiple: PathMultigraph | None = None
    trail: EulerTrail | None = None
    forests: tuple[LinearForest, ...] | None = None
    x: ProductVertex | None = None
    y: ProductVertex | None = None
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.walk is not None

    def to_dict(self) -> dict:
        out: dict = {"goal": self.goal, "feasible": self.feasible, "decision": self.decision.to_dict()}
        if self.walk is not None:
            out["witness"] = self.walk.to_dict()
        if self.multiple is not None:
            out["multiple"] = self.multiple.to_dict()
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class _Plan:
    gm: PathMultigraph
    constraints: list[ForestConstraints]
    start: int
    end: int | None = None
    reopen: bool = False


def _plain(gm: PathMultigraph) -> list[ForestConstraints]:
    return [ForestConstraints(l) for l in gm.loops]


def _cycle_plan(spec: ProductSpec, pis: list[int]) -> _Plan:
    m, n = spec.m, spec.n
    if m % 2:
        plan = plan_loops(pis, n, (1, 1))
        gm = build_cycle_multiple_odd(n, m // 2, plan)
    elif m == 2:
        gm = build_join_cycle_multiple(n)
    else:
        gm = build_even_cycle_multiple(n, m // 2)
    return _Plan(gm, _plain(gm), 1)


def _odd_traceable_plan(spec: ProductSpec, pis: list[int]) -> _Plan:
    m, n = spec.m, spec.n
    minima, target = lemma_requirements("III", n, m, 1, m)
    plan = plan_loops(pis, target, minima)
    gm = build_lemma_multiple("III", n, m // 2, 1, m, plan)
    return _Plan(gm, _plain(gm), 1, m)


def _layer_constraints(spec: ProductSpec, x: ProductVertex, y: ProductVertex) -> dict[int, tuple[list[int], tuple[int, int] | None]]:
    """Terminal vertices and separated pair demanded in the layers of x and y."""
    out: dict[int, tuple[list[int], tuple[int, int] | None]] = {}
    for p in (x, y):
        terms = [q.inner for q in (x, y) if q.layer == p.layer]
        pair = (x.inner, y.inner) if x.layer == y.layer else None
        out[p.layer] = (terms, pair)
    return out


def _xy_plan(spec: ProductSpec, pis: list[int], x: ProductVertex, y: ProductVertex) -> _Plan:
    m, n = spec.m, spec.n
    a, b = x.layer, y.layer
    demands = _layer_constraints(spec, x, y)
    caps = list(pis)
    for layer, (terms, pair) in demands.items():
        caps[layer - 1] = forest_budget(spec.layer(layer), terms, pair)

    def constraints(gm: PathMultigraph) -> list[ForestConstraints]:
        out = []
        for i, loops in enumerate(gm.loops, start=1):
            if loops > caps[i - 1]:
                raise InfeasibleBudget(f"layer {i} needs {loops} forest edges, only {caps[i - 1]} available")
            terms, pair = demands.get(i, ((), None))
            out.append(ForestConstraints(loops, terms, pair))
        return out

    if m % 2:
        case = lemma_case(a, b)
        if case == "II" and a % 2 == 0:
            raise ParityError("case II expects x in an odd layer; swap the endpoints first")
        minima, target = lemma_requirements(case, n, m, a, b)
        plan = plan_loops(caps, target, minima)
        gm = build_lemma_multiple(case, n, m // 2, a, b, plan)
    elif m == 2:
        if a != b:
            gm = PathMultigraph(2, (2 * n - 1,), (0, 0))
        else:
            loops = (0, 1) if a == 1 else (1, 0)
            gm = PathMultigraph(2, (2 * n - 2,), loops)
            if gm.mult[0] < 1:
                raise InfeasibleBudget("two vertices of one layer need n >= 2")
    else:
        gm = build_even_hamcon_multiple(n, m // 2, a, b)
    return _Plan(gm, constraints(gm), a, b if a != b else None, reopen=a == b)


def _realize(spec: ProductSpec, plan: _Plan, x: ProductVertex | None, y: ProductVertex | None):
    forests = tuple(constrained_forest(h, c) for h, c in zip(spec.layers, plan.constraints))
    trail = euler_trail(plan.gm, plan.start, plan.end)
    if plan.reopen:
        trail = trail.opened()
    if x is None and not trail.closed:
        # free endpoints: any path end of the first and last visited layers
        x = ProductVertex(trail.vertices[0], forests[trail.vertices[0] - 1].components[0][0])
        y = ProductVertex(trail.vertices[-1], forests[trail.vertices[-1] - 1].components[-1][-1])
    return forests, trail, assemble(trail, forests, x, y), x, y


def normalize_goal(goal: str) -> Goal:
    key = goal.replace("_", "-").lower()
    if key not in GOALS:
        raise ValueError(f"unknown goal {goal!r}; expected one of {GOALS}")
    return key  # type: ignore[return-value]


def construct(
    spec: ProductSpec,
    goal: str,
    x: ProductVertex | None = None,
    y: ProductVertex | None = None,
) -> Construction:
    """Decide the goal and, when possible, build and verify a witness.

    Infeasibility is returned as a value carrying the decision ledger.  For
    ``xy-path`` the decision is hamiltonian connectivity of the whole product;
    a single pair may still be routable when it fails, and the pair is always
    attempted.
    """
    goal = normalize_goal(goal)
    if spec.m < 2:
        raise ValueError("construction needs a path with at least 2 vertices")
    m, n = spec.m, spec.n
    pis = [pi(h) for h in spec.layers]

    if goal == "xy-path":
        if x is None or y is None:
            raise ValueError("xy-path needs both x and y")
        x, y = ProductVertex(*x), ProductVertex(*y)
        for p in (x, y):
            if not spec.contains(p):
                raise ValueError(f"{p} is not a vertex of the product")
        if x == y:
            raise ValueError("x and y must be distinct")
        decision = decide_ham_connected(m, pis, n)
        swap = m % 2 == 1 and x.layer % 2 == 0 and y.layer % 2 == 1
        src, dst = (y, x) if swap else (x, y)
        try:
            plan = _xy_plan(spec, pis, src, dst)
        except (InfeasibleBudget, InfeasibleConstraints, ParityError) as exc:
            if decision.verdict:
                raise AssertionError(f"hamiltonian connected product, but pair {x}, {y} failed: {exc}") from exc
            return Construction(goal, decision, x=x, y=y, reason=str(exc))
        forests, trail, walk, _, _ = _realize(spec, plan, src, dst)
        if swap:
            walk = walk.reversed()
        report = verify_ham_path(spec, walk, x, y)
    elif goal == "cycle":
        decision = decide_hamiltonian(m, pis, n)
        if not decision.verdict:
            return Construction(goal, decision, reason="decision is negative")
        plan = _cycle_plan(spec, pis)
        forests, trail, walk, _, _ = _realize(spec, plan, None, None)
        report = verify_ham_cycle(spec, walk)
    else:
        decision = decide_traceable(m, pis, n)
        if not decision.verdict:
            return Construction(goal, decision, reason="decision is negative")
        if m % 2 == 0:
            walk, gm = zigzag_path(spec)
            report = verify_ham_path(spec, walk)
            _check(report, verify_edge_profile(walk, gm))
            return Construction(goal, decision, walk, gm, x=walk.vertices[0], y=walk.vertices[-1])
        plan = _odd_traceable_plan(spec, pis)
        forests, trail, walk, x, y = _realize(spec, plan, None, None)
        report = verify_ham_path(spec, walk, x, y)
    _check(report, verify_edge_profile(walk, plan.gm))
    return Construction(goal, decision, walk, plan.gm, trail, forests, x, y)


def _check(*reports) -> None:
    for r in reports:
        if not r:
            raise AssertionError(f"internal witness failed verification: {r.code} at {r.index}: {r.message}")
