"""Multiples of a path used to route Hamiltonian cycles and paths.

Each builder returns a :class:`PathMultigraph` whose degree profile is 2n at
every vertex, except the endpoint layers of a requested path, which get
2n - 1 (or 2n - 2 when both endpoints share a layer).  Loops at u_i are
later realized by a linear forest of H_i with that many edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import InfeasibleBudget, ParityError
from .graphs import PathMultigraph

LemmaCase = Literal["I", "II", "III"]


@dataclass(frozen=True)
class IndicatorPair:
    """Step functions A(t) = [t >= a] and B(t) = [t >= b]."""

    a: int
    b: int

    def A(self, t: int) -> int:
        return int(t >= self.a)

    def B(self, t: int) -> int:
        return int(t >= self.b)


@dataclass(frozen=True)
class LoopPlan:
    loops: tuple[int, ...]
    minima: tuple[int, int]
    target_sum: int

    @property
    def m(self) -> int:
        return len(self.loops)

    def odd_sum(self) -> int:
        return sum(self.loops[0::2])


def lemma_case(a: int, b: int) -> LemmaCase:
    """Case by endpoint-layer parity: even/even, mixed, odd/odd."""
    if a % 2 == 0 and b % 2 == 0:
        return "I"
    if a % 2 == 1 and b % 2 == 1:
        return "III"
    return "II"


def lemma_requirements(case: LemmaCase, n: int, m: int, a: int, b: int) -> tuple[tuple[int, int], int]:
    """(minimum loops at u_1 and u_m, required odd-layer loop total)."""
    if case == "I":
        return (2, 2), n + 1
    if case == "II":
        return (1, 1), n
    if {a, b} == {1, m} and a != b:
        return (0, 0), n - 1
    return (1, 1), n - 1


def plan_loops(pis: Sequence[int], target_sum: int, minima: tuple[int, int]) -> LoopPlan:
    """Loop counts for the odd layers of an odd path.

    Starts from ``pis`` at odd positions (even positions get 0), then removes
    loops in the order u_3, u_5, ..., u_m, u_1 until the odd total is
    ``target_sum``; interior vertices may drop to 0, u_m and u_1 only to their
    minima.
    """
    m = len(pis)
    lo_first, lo_last = minima
    if m % 2 == 0 or m < 3:
        raise ParityError("loop plans are defined for odd paths with at least 3 vertices")
    odd = list(range(0, m, 2))
    if any(p < 0 for p in pis):
        raise InfeasibleBudget("budgets must be non-negative")
    if sum(pis[i] for i in odd) < target_sum:
        raise InfeasibleBudget(
            f"odd-layer budget {sum(pis[i] for i in odd)} is below the target {target_sum}"
        )
    if pis[0] < lo_first or pis[-1] < lo_last:
        raise InfeasibleBudget(f"end budgets {pis[0]}, {pis[-1]} below minima {minima}")
    if target_sum < lo_first + lo_last:
        raise InfeasibleBudget(f"target {target_sum} cannot cover the minima {minima}")
    loops = [pis[i] if i % 2 == 0 else 0 for i in range(m)]
    excess = sum(loops) - target_sum
    for i in odd[1:] + [0]:
        floor = lo_last if i == m - 1 else lo_first if i == 0 else 0
        take = min(excess, loops[i] - floor)
        loops[i] -= take
        excess -= take
    assert excess == 0
    return LoopPlan(tuple(loops), minima, target_sum)


def _prefix_loop_sums(loops: Sequence[int], k: int) -> list[int]:
    """S[i] = loops at u_1, u_3, ..., u_{2i-1} for i = 0..k."""
    sums = [0]
    for i in range(1, k + 1):
        sums.append(sums[-1] + loops[2 * i - 2])
    return sums


def _check_odd_plan(n: int, k: int, plan: LoopPlan, target: int, minima: tuple[int, int]) -> None:
    m = 2 * k + 1
    if plan.m != m:
        raise ParityError(f"plan has {plan.m} layers, expected {m}")
    if any(plan.loops[1::2]):
        raise InfeasibleBudget("even path vertices must carry no loops")
    if plan.odd_sum() != target:
        raise InfeasibleBudget(f"odd loop total {plan.odd_sum()} differs from required {target}")
    if plan.loops[0] < minima[0] or plan.loops[-1] < minima[1]:
        raise InfeasibleBudget(f"end loops {plan.loops[0]}, {plan.loops[-1]} below {minima}")


def _finish(m: int, mult: list[int], loops: Sequence[int]) -> PathMultigraph:
    if any(x < 1 for x in mult):
        raise InfeasibleBudget(f"multiplicities {mult} leave the multiple disconnected")
    return PathMultigraph(m, tuple(mult), tuple(loops))


def build_cycle_multiple_odd(n: int, k: int, plan: LoopPlan) -> PathMultigraph:
    """Connected 2n-regular multiple of P_{2k+1}."""
    _check_odd_plan(n, k, plan, n, (1, 1))
    sums = _prefix_loop_sums(plan.loops, k)
    mult = []
    for i in range(1, k + 1):
        mult.append(2 * n - 2 * sums[i])  # e_{2i-1}
        mult.append(2 * sums[i])  # e_{2i}
    return _finish(2 * k + 1, mult, plan.loops)


def build_lemma_multiple(case: LemmaCase, n: int, k: int, a: int, b: int, plan: LoopPlan) -> PathMultigraph:
    """Multiple of P_{2k+1} with degree 2n except at u_a, u_b.

    Case I needs a, b even; case II needs a odd and b even; case III needs
    a, b odd.  The odd-layer loop total must be n + 1, n and n - 1 respectively.
    """
    m = 2 * k + 1
    if not (1 <= a <= m and 1 <= b <= m):
        raise ParityError(f"endpoint layers {a}, {b} outside 1..{m}")
    if lemma_case(a, b) != case or (case == "II" and a % 2 == 0):
        raise ParityError(f"layers a={a}, b={b} do not fit case {case}")
    minima, target = lemma_requirements(case, n, m, a, b)
    _check_odd_plan(n, k, plan, target, minima)
    ind = IndicatorPair(a, b)
    sign_a, sign_b = {"I": (-1, -1), "II": (1, -1), "III": (1, 1)}[case]
    sums = _prefix_loop_sums(plan.loops, k)
    mult = []
    for i in range(1, k + 1):
        t = 2 * i - 1
        mult.append(2 * n - 2 * sums[i] - sign_a * ind.A(t) - sign_b * ind.B(t))
        t = 2 * i
        mult.append(2 * sums[i] + sign_a * ind.A(t) + sign_b * ind.B(t))
    return _finish(m, mult, plan.loops)


def build_even_cycle_multiple(n: int, k: int) -> PathMultigraph:
    """2n-regular multiple of P_{2k} with one loop at each end."""
    if n < 2:
        raise InfeasibleBudget("an even-path cycle multiple needs n >= 2")
    mult = [2 * n - 2 if j % 2 == 1 else 2 for j in range(1, 2 * k)]
    loops = [0] * (2 * k)
    loops[0] = loops[-1] = 1
    return _finish(2 * k, mult, loops)


def build_join_cycle_multiple(n: int) -> PathMultigraph:
    """Loopless 2n-regular multiple of P_2: a Hamiltonian cycle of K_{n,n}."""
    if n < 2:
        raise InfeasibleBudget("K_{n,n} has a Hamiltonian cycle only for n >= 2")
    return PathMultigraph(2, (2 * n,), (0, 0))


def _one_factor(first: int, last_vertex: int) -> list[int]:
    """Edge indices e_first, e_{first+2}, ... of the path u_first..u_last_vertex."""
    return list(range(first, last_vertex, 2))


def build_even_hamcon_multiple(n: int, k: int, a: int, b: int) -> PathMultigraph:
    """Multiple of P_{2k}, k > 1, with deficits at u_a and u_b.

    Starts from two copies of the path plus 2n - 4 copies of its 1-factor and a
    loop at each end, then shifts multiplicity along u_a..u_b (and u_b..u_{2k}
    when b - a is even) so that only u_a and u_b lose degree.
    """
    m = 2 * k
    if k < 2:
        raise ParityError("k = 1 is handled without a multiple")
    if not (1 <= a <= m and 1 <= b <= m):
        raise ParityError(f"endpoint layers {a}, {b} outside 1..{m}")
    a, b = min(a, b), max(a, b)
    if (b - a) % 2 == 0 and a % 2 == 0:
        gm = build_even_hamcon_multiple(n, k, m + 1 - b, m + 1 - a)
        return PathMultigraph(m, gm.mult[::-1], gm.loops[::-1])
    if n < 2 or ((b - a) % 2 == 0 and n < 3):
        raise InfeasibleBudget(f"n = {n} is too small for this even-path multiple")
    mult = [2 + (2 * n - 4 if j % 2 == 1 else 0) for j in range(1, m)]
    loops = [0] * m
    loops[0] += 1
    loops[-1] += 1

    def add(edges: list[int], amount: int) -> None:
        for j in edges:
            mult[j - 1] += amount

    if (b - a) % 2 == 1:
        add(_one_factor(a, b), -1)  # F_1: 1-factor of u_a..u_b
        add(_one_factor(a + 1, b - 1), 1)  # F_2: the remaining edges
    else:
        loops[-1] += 1
        add(_one_factor(a, b - 1), -1)  # F_1: 1-factor of u_a..u_{b-1}
        add(_one_factor(a + 1, b), 1)  # F_2: 1-factor of u_{a+1}..u_b
        add(_one_factor(b, m), -2)  # F_3: 1-factor of u_b..u_{2k}
        add(_one_factor(b + 1, m - 1), 2)  # F_4: the remaining edges
    return _finish(m, mult, loops)
