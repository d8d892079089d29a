import itertools
import random

import pytest

from lexham.graphs import SimpleGraph, disjoint_union, empty_graph, path_graph

ACCEPTANCE_LINES: list[str] = []


def small_graphs(n: int) -> list[SimpleGraph]:
    """One representative per isomorphism class, for n <= 3."""
    reps = {
        1: [SimpleGraph(1)],
        2: [SimpleGraph(2), SimpleGraph(2, [(0, 1)])],
        3: [
            SimpleGraph(3),
            SimpleGraph(3, [(0, 1)]),
            SimpleGraph(3, [(0, 1), (1, 2)]),
            SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]),
        ],
    }
    return reps[n]


def four_vertex_graphs() -> list[SimpleGraph]:
    """The 11 isomorphism classes on 4 vertices."""
    edge_lists = [
        [],
        [(0, 1)],
        [(0, 1), (2, 3)],
        [(0, 1), (1, 2)],
        [(0, 1), (1, 2), (0, 2)],
        [(0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 2), (2, 3)],
        [(0, 1), (1, 2), (2, 0), (2, 3)],
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ]
    return [SimpleGraph(4, e) for e in edge_lists]


def all_labelled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    return SimpleGraph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def figure_layer() -> SimpleGraph:
    """P_3 + 3K_1."""
    return disjoint_union(path_graph(3), empty_graph(3))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
