import pytest

from lexham.graphs import PathMultigraph, ProductVertex as V, ProductWalk, SimpleGraph, cycle_graph
from lexham.multiple import LoopPlan, build_cycle_multiple_odd, build_lemma_multiple
from lexham.product import ProductSpec
from lexham.verify import verify_edge_profile, verify_ham_cycle, verify_ham_path, verify_multiple
from lexham.witness import zigzag_path

from conftest import figure_layer

WORKED = ProductWalk(((1, 0), (1, 1), (2, 0), (3, 0), (3, 1), (2, 1)), True)


def test_cycle_examples():
    c4 = cycle_graph(4)
    assert verify_ham_cycle(c4, [0, 1, 2, 3])
    r = verify_ham_cycle(c4, [0, 2, 1, 3])
    assert not r and r.code == "not-adjacent" and r.index == 0


@pytest.mark.parametrize(
    "walk, code",
    [
        ([0, 1, 2], "length"),
        ([0, 1, 2, 2], "repeat"),
        ([0, 1, 2, 7], "out-of-range"),
    ],
)
def test_cycle_violation_codes(walk, code):
    assert verify_ham_cycle(cycle_graph(4), walk).code == code


def test_cycle_needs_three_vertices_and_closure():
    assert verify_ham_cycle(SimpleGraph(2, [(0, 1)]), [0, 1]).code == "too-small"
    spec = ProductSpec.uniform(2, SimpleGraph(2))
    open_walk = ProductWalk(((1, 0), (2, 0), (1, 1), (2, 1)), False)
    assert verify_ham_cycle(spec, open_walk).code == "not-closed"
    assert verify_ham_cycle(spec, ProductWalk(open_walk.vertices, True))


def test_path_examples():
    spec = ProductSpec.uniform(2, SimpleGraph(1))
    walk = ProductWalk(((1, 0), (2, 0)), False)
    assert verify_ham_path(spec, walk, V(1, 0), V(2, 0))
    r = verify_ham_path(spec, walk, V(2, 0), V(1, 0))
    assert r.code == "start" and r.index == 0
    assert verify_ham_path(spec, ProductWalk(walk.vertices, True)).code == "closed"
    assert verify_ham_path(spec, ProductWalk(((1, 0), (3, 0)), False)).code == "out-of-range"


def test_edge_profile_examples():
    assert verify_edge_profile(WORKED, PathMultigraph(3, (2, 2), (1, 0, 1)))
    r = verify_edge_profile(WORKED, PathMultigraph(3, (2, 2), (0, 1, 1)))
    assert not r and r.code == "layer-count" and r.index == 1
    r = verify_edge_profile(WORKED, PathMultigraph(3, (3, 1), (1, 0, 1)))
    assert r.code == "crossing-count" and r.index == 1
    jump = ProductWalk(((1, 0), (3, 0)), False)
    assert verify_edge_profile(jump, PathMultigraph(3, (0, 0), (0, 0, 0))).code == "layer-jump"


def test_zigzag_profile():
    spec = ProductSpec.uniform(4, figure_layer())
    walk, gm = zigzag_path(spec)
    assert verify_ham_path(spec, walk)
    assert verify_edge_profile(walk, gm)


def test_multiple_examples():
    gm = build_cycle_multiple_odd(6, 2, LoopPlan((2, 0, 2, 0, 2), (1, 1), 6))
    assert verify_multiple(gm, 6)
    tampered = PathMultigraph(5, (gm.mult[0] + 1,) + gm.mult[1:], gm.loops)
    r = verify_multiple(tampered, 6)
    assert r.code == "degree" and r.index == 1 and "u_2" in r.message
    lemma = build_lemma_multiple("II", 2, 1, 1, 2, LoopPlan((1, 0, 1), (1, 1), 2))
    assert verify_multiple(lemma, 2, ("open", 1, 2))
    assert verify_multiple(PathMultigraph(3, (0, 4), (2, 0, 0)), 2).code == "disconnected"
    with pytest.raises(ValueError):
        verify_multiple(gm, 6, ("open", 0, 9))


def test_report_serialization():
    r = verify_ham_cycle(cycle_graph(4), [0, 2, 1, 3])
    assert r.to_dict()["code"] == "not-adjacent"
