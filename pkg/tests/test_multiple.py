import pytest
from hypothesis import given, strategies as st

from lexham.errors import InfeasibleBudget, ParityError
from lexham.graphs import PathMultigraph, multigraph_degree
from lexham.multiple import (
    IndicatorPair,
    LoopPlan,
    build_cycle_multiple_odd,
    build_even_cycle_multiple,
    build_even_hamcon_multiple,
    build_join_cycle_multiple,
    build_lemma_multiple,
    lemma_case,
    lemma_requirements,
    plan_loops,
)
from lexham.verify import verify_multiple


def test_indicator_pair():
    ind = IndicatorPair(2, 4)
    assert [ind.A(t) for t in range(1, 6)] == [0, 1, 1, 1, 1]
    assert [ind.B(t) for t in range(1, 6)] == [0, 0, 0, 1, 1]


def test_plan_loops_examples():
    assert plan_loops([2, 2, 2, 2, 2], 6, (1, 1)).loops == (2, 0, 2, 0, 2)
    assert plan_loops([1, 0, 1], 2, (1, 1)).loops == (1, 0, 1)
    assert plan_loops([3, 0, 3], 4, (1, 1)).loops == (3, 0, 1)


def test_plan_loops_order_and_errors():
    # interior odd vertices drop first, then u_m, then u_1
    assert plan_loops([3, 5, 3, 5, 3], 5, (1, 1)).loops == (3, 0, 0, 0, 2)
    assert plan_loops([3, 0, 3, 0, 3], 2, (1, 1)).loops == (1, 0, 0, 0, 1)
    assert plan_loops([3, 0, 3, 0, 3], 4, (1, 1)).loops == (3, 0, 0, 0, 1)
    with pytest.raises(InfeasibleBudget):
        plan_loops([1, 0, 1], 3, (1, 1))
    with pytest.raises(InfeasibleBudget):
        plan_loops([0, 0, 3], 2, (1, 1))
    with pytest.raises(InfeasibleBudget):
        plan_loops([3, 0, 3], 1, (1, 1))
    with pytest.raises(ParityError):
        plan_loops([1, 1], 1, (0, 0))


def test_cycle_multiple_examples():
    assert build_cycle_multiple_odd(2, 1, LoopPlan((1, 0, 1), (1, 1), 2)).mult == (2, 2)
    gm = build_cycle_multiple_odd(6, 2, LoopPlan((2, 0, 2, 0, 2), (1, 1), 6))
    assert gm.mult == (8, 4, 4, 8)
    assert gm.degrees() == [12] * 5
    with pytest.raises(InfeasibleBudget):
        build_cycle_multiple_odd(6, 1, LoopPlan((2, 0, 2), (1, 1), 4))


def test_lemma_examples():
    gm = build_lemma_multiple("III", 6, 1, 1, 3, LoopPlan((2, 0, 3), (0, 0), 5))
    assert gm.mult == (7, 5) and gm.degrees() == [11, 12, 11]
    gm = build_lemma_multiple("II", 2, 1, 1, 2, LoopPlan((1, 0, 1), (1, 1), 2))
    assert gm.mult == (1, 2) and gm.degrees() == [3, 3, 4]
    gm = build_lemma_multiple("I", 3, 1, 2, 2, LoopPlan((2, 0, 2), (2, 2), 4))
    assert gm.mult == (2, 2) and gm.degrees() == [6, 4, 6]


def test_lemma_rejects_wrong_parity():
    plan = LoopPlan((1, 0, 1), (1, 1), 2)
    with pytest.raises(ParityError):
        build_lemma_multiple("I", 2, 1, 1, 2, plan)
    with pytest.raises(ParityError):
        build_lemma_multiple("II", 2, 1, 2, 1, plan)
    with pytest.raises(ParityError):
        build_lemma_multiple("III", 2, 1, 1, 4, plan)


def test_requirements_table():
    assert lemma_case(2, 4) == "I" and lemma_case(1, 4) == "II" and lemma_case(3, 3) == "III"
    assert lemma_requirements("I", 5, 5, 2, 4) == ((2, 2), 6)
    assert lemma_requirements("II", 5, 5, 1, 2) == ((1, 1), 5)
    assert lemma_requirements("III", 5, 5, 1, 5) == ((0, 0), 4)
    assert lemma_requirements("III", 5, 5, 3, 5) == ((1, 1), 4)
    assert lemma_requirements("III", 5, 5, 1, 1) == ((1, 1), 4)


def test_even_cycle_examples():
    gm = build_even_cycle_multiple(2, 1)
    assert gm.mult == (2,) and gm.loops == (1, 1) and gm.degrees() == [4, 4]
    gm = build_even_cycle_multiple(3, 2)
    assert gm.mult == (4, 2, 4) and gm.loops == (1, 0, 0, 1) and gm.degrees() == [6] * 4
    with pytest.raises(InfeasibleBudget):
        build_even_cycle_multiple(1, 2)
    assert build_join_cycle_multiple(3).degrees() == [6, 6]


def test_even_hamcon_examples():
    gm = build_even_hamcon_multiple(3, 2, 1, 2)
    assert gm.mult == (3, 2, 4) and gm.loops == (1, 0, 0, 1) and gm.degrees() == [5, 5, 6, 6]
    gm = build_even_hamcon_multiple(3, 2, 1, 3)
    assert gm.mult == (3, 3, 2) and gm.loops == (1, 0, 0, 2) and gm.degrees() == [5, 6, 5, 6]
    gm = build_even_hamcon_multiple(3, 2, 2, 2)
    assert verify_multiple(gm, 3, ("open", 2, 2))
    with pytest.raises(ParityError):
        build_even_hamcon_multiple(3, 1, 1, 2)
    with pytest.raises(InfeasibleBudget):
        build_even_hamcon_multiple(2, 2, 1, 3)


@given(st.integers(3, 7), st.integers(2, 5), st.data())
def test_even_hamcon_profile(n, k, data):
    m = 2 * k
    a = data.draw(st.integers(1, m))
    b = data.draw(st.integers(1, m))
    gm = build_even_hamcon_multiple(n, k, a, b)
    assert verify_multiple(gm, n, ("open", a, b))
    assert min(gm.mult) >= 1
    assert sorted((gm.loops[0], gm.loops[-1])) in ([1, 1], [1, 2])


@given(st.integers(1, 6), st.integers(1, 4), st.data())
def test_handshake_and_parity(n, k, data):
    m = 2 * k + 1
    a = data.draw(st.integers(1, m))
    b = data.draw(st.integers(1, m))
    case = lemma_case(a, b)
    if case == "II" and a % 2 == 0:
        a, b = b, a
    minima, target = lemma_requirements(case, n, m, a, b)
    pis = [n - 1] * m
    try:
        plan = plan_loops(pis, target, minima)
        gm = build_lemma_multiple(case, n, k, a, b, plan)
    except InfeasibleBudget:
        return
    degs = gm.degrees()
    assert sum(degs) == 2 * sum(gm.mult) + 2 * sum(gm.loops)
    odd = [i for i in range(1, m + 1) if (degs[i - 1] - 2 * gm.loops[i - 1]) % 2]
    assert odd == ([] if a == b else sorted({a, b}))


def test_multiple_degrees_directly():
    gm = PathMultigraph(4, (3, 2, 4), (1, 0, 0, 1))
    assert [multigraph_degree(gm, i) for i in range(1, 5)] == [5, 5, 6, 6]
