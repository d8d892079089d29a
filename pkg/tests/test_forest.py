import random

import pytest
from hypothesis import given, settings, strategies as st

from lexham.errors import InfeasibleConstraints, InstanceTooLarge
from lexham.forest import ForestConstraints, constrained_forest, forest_budget, max_linear_forest, pi
from lexham.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from lexham.oracle import brute_pi, brute_traceable

from conftest import all_labelled_graphs, figure_layer, random_graph


def test_pi_examples():
    assert pi(figure_layer()) == 2
    assert max_linear_forest(figure_layer()).edge_count == 2
    assert max_linear_forest(empty_graph(5)).edge_count == 0
    assert max_linear_forest(star_graph(3)).edge_count == 2
    assert brute_pi(star_graph(3)) == 2
    for n in range(1, 9):
        assert pi(path_graph(n)) == n - 1
    assert pi(cycle_graph(5)) == 4 == brute_pi(cycle_graph(5))


def test_forest_is_lexicographically_smallest():
    # C_4: dropping the largest edge (2, 3) keeps the smallest edge set
    assert max_linear_forest(cycle_graph(4)).edges() == [(0, 1), (0, 3), (1, 2)]
    assert max_linear_forest(figure_layer()).components == ((0, 1, 2), (3,), (4,), (5,))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_pi_matches_enumeration_on_all_labelled_graphs(n):
    graphs = list(all_labelled_graphs(n))
    if n == 6:
        graphs = random.Random(n).sample(graphs, 400)
    for g in graphs:
        assert pi(g) == brute_pi(g), g


def test_witness_forest_is_valid(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        f = max_linear_forest(g)
        assert f.is_subgraph_of(g)
        assert f.edge_count == pi(g)


def test_traceable_iff_pi_is_n_minus_1(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        assert brute_traceable(g) == (pi(g) == g.order - 1)


def test_monotone_under_edge_addition(rng):
    for _ in range(100):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.3)
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
        if missing:
            assert pi(g.add_edge(*rng.choice(missing))) >= pi(g)


def test_large_dense_component_is_refused():
    with pytest.raises(InstanceTooLarge):
        pi(complete_graph(25))


def test_large_graph_with_small_components_is_fine():
    g = empty_graph(1)
    for _ in range(6):
        g = disjoint_union(g, cycle_graph(5))
    assert pi(g) == 6 * 4


def test_sparse_fallback_beyond_dp_limit():
    assert pi(cycle_graph(22)) == 21
    assert pi(star_graph(21)) == 2


def test_constrained_forest_examples():
    f = constrained_forest(path_graph(4), ForestConstraints(3, {0}))
    assert f.components == ((0, 1, 2, 3),)
    f = constrained_forest(path_graph(3), ForestConstraints(1, {1}))
    assert f.edge_count == 1 and f.degree(1) <= 1
    f = constrained_forest(complete_graph(3), ForestConstraints(1, separated_pair=(0, 1)))
    assert f.edge_count == 1
    assert f.component_index(0) != f.component_index(1)
    assert f.is_subgraph_of(complete_graph(3))


def test_constrained_forest_rejects_excess_and_bad_vertices():
    with pytest.raises(InfeasibleConstraints):
        constrained_forest(path_graph(3), ForestConstraints(3))
    with pytest.raises(InfeasibleConstraints):
        constrained_forest(path_graph(3), ForestConstraints(1, {5}))
    with pytest.raises(InfeasibleConstraints):
        ForestConstraints(1, separated_pair=(2, 2))


def test_budget_loses_at_most_two_edges(rng):
    for _ in range(300):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.random())
        x, y = rng.sample(range(n), 2)
        budget = forest_budget(g, [x, y], (x, y))
        assert pi(g) - 2 <= budget <= pi(g)
        if pi(g) <= 3:
            assert budget >= pi(g) - 1


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**28 - 1), st.data())
def test_constrained_forest_meets_every_clause(n, mask, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
    terminals = data.draw(st.sets(st.integers(0, n - 1), max_size=2))
    pair = data.draw(st.one_of(st.none(), st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])))
    budget = forest_budget(g, terminals, pair)
    exact = data.draw(st.integers(0, budget))
    f = constrained_forest(g, ForestConstraints(exact, terminals, pair))
    assert f.edge_count == exact
    assert f.is_subgraph_of(g)
    assert all(f.degree(t) <= 1 for t in terminals)
    if pair:
        assert f.component_index(pair[0]) != f.component_index(pair[1])
