"""Closed-form decisions for P_m[H_1, ..., H_m].

All procedures take the linear-forest numbers pi(H_i) rather than graphs, so
the expensive part is computed once and reused; :func:`decide` is the
graph-level convenience wrapper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Literal, Sequence

from .forest import pi
from .product import ProductSpec

Property = Literal["hamiltonian", "traceable", "ham_connected"]
PROPERTIES: tuple[Property, ...] = ("hamiltonian", "traceable", "ham_connected")


@dataclass(frozen=True)
class Condition:
    name: str
    required: Any
    actual: Any
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "condition": self.name,
            "required": self.required,
            "actual": self.actual,
            "satisfied": self.satisfied,
        }


def _at_least(name: str, required: int, actual: int) -> Condition:
    return Condition(name, required, actual, actual >= required)


@dataclass(frozen=True)
class Decision:
    """Verdict together with every condition that produced it.

    ``verdict`` is the conjunction of the ledger.  ``alternatives`` records
    readings that were evaluated for information but do not bind the verdict.
    """

    verdict: bool
    ledger: tuple[Condition, ...]
    citation: str
    alternatives: tuple[Condition, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.verdict != all(c.satisfied for c in self.ledger):
            raise ValueError("verdict must equal the conjunction of the ledger")

    @classmethod
    def of(cls, ledger: Sequence[Condition], citation: str, alternatives: Sequence[Condition] = ()) -> Decision:
        return cls(all(c.satisfied for c in ledger), tuple(ledger), citation, tuple(alternatives))

    def failed(self) -> list[Condition]:
        return [c for c in self.ledger if not c.satisfied]

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "ledger": [c.to_dict() for c in self.ledger],
            "citation": self.citation,
        }
        if self.alternatives:
            out["alternate_readings"] = [c.to_dict() for c in self.alternatives]
        return out


def _validate(m: int, pis: Sequence[int], n: int) -> None:
    if m < 2:
        raise ValueError(f"the path needs at least 2 vertices, got m={m}")
    if len(pis) != m:
        raise ValueError(f"expected {m} pi values, got {len(pis)}")
    if n < 1 or any(not 0 <= p <= n - 1 for p in pis):
        raise ValueError(f"pi values must lie in 0..{n - 1}")


def odd_layer_sum(pis: Sequence[int]) -> int:
    """pi(H_1) + pi(H_3) + ... + pi(H_m) over the odd path positions."""
    return sum(pis[0::2])


def decide_hamiltonian(m: int, pis: Sequence[int], n: int) -> Decision:
    _validate(m, pis, n)
    if m % 2 == 1:
        return Decision.of(
            [
                _at_least("pi(H_1)", 1, pis[0]),
                _at_least(f"pi(H_{m})", 1, pis[-1]),
                _at_least("sum of pi over odd layers vs n", n, odd_layer_sum(pis)),
            ],
            "odd path: hamiltonian iff pi(H_1) >= 1, pi(H_m) >= 1 and odd-layer sum >= n",
        )
    if m == 2:
        # K_{n,n} is a spanning subgraph and is hamiltonian for n >= 2.
        return Decision.of(
            [_at_least("layer order n", 2, n)],
            "P_2: the complete join K_{n,n} is hamiltonian iff n >= 2",
        )
    return Decision.of(
        [_at_least("pi(H_1)", 1, pis[0]), _at_least(f"pi(H_{m})", 1, pis[-1])],
        "even path: hamiltonian iff pi(H_1) >= 1 and pi(H_m) >= 1",
    )


def decide_traceable(m: int, pis: Sequence[int], n: int) -> Decision:
    _validate(m, pis, n)
    if m % 2 == 1:
        return Decision.of(
            [_at_least("sum of pi over odd layers vs n-1", n - 1, odd_layer_sum(pis))],
            "odd path: traceable iff odd-layer sum >= n - 1",
        )
    return Decision.of(
        [Condition("path order parity", "even", "even", True)],
        "even path: always traceable",
    )


def decide_ham_connected(m: int, pis: Sequence[int], n: int) -> Decision:
    _validate(m, pis, n)
    if m % 2 == 1:
        return Decision.of(
            [
                _at_least("pi(H_1)", 2, pis[0]),
                _at_least(f"pi(H_{m})", 2, pis[-1]),
                _at_least("sum of pi over odd layers vs n+1", n + 1, odd_layer_sum(pis)),
            ],
            "odd path: hamiltonian connected iff pi(H_1) >= 2, pi(H_m) >= 2 and odd-layer sum >= n + 1",
        )
    if m == 2:
        if n == 1:
            return Decision.of(
                [Condition("layer order n = 1 (the product is K_2)", 1, n, True)],
                "P_2 with single-vertex layers: K_2 is hamiltonian connected",
            )
        return Decision.of(
            [_at_least("pi(H_1)", 1, pis[0]), _at_least("pi(H_2)", 1, pis[1])],
            "P_2: hamiltonian connected iff pi(H_1) >= 1 and pi(H_2) >= 1",
        )
    return Decision.of(
        [_at_least("pi(H_1)", 2, pis[0]), _at_least(f"pi(H_{m})", 2, pis[-1])],
        f"even path, k > 1: hamiltonian connected iff pi(H_1) >= 2 and pi(H_{m}) >= 2",
        alternatives=[_at_least("pi(H_2) (statement reading, not binding)", 2, pis[1])],
    )


_DECIDERS = {
    "hamiltonian": decide_hamiltonian,
    "traceable": decide_traceable,
    "ham_connected": decide_ham_connected,
}


def normalize_property(prop: str) -> Property:
    key = prop.replace("-", "_").lower()
    if key not in _DECIDERS:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    return key  # type: ignore[return-value]


def decide_general(m: int, pis: Sequence[int], n: int, prop: str) -> Decision:
    return _DECIDERS[normalize_property(prop)](m, pis, n)


def decide(spec: ProductSpec, prop: str) -> Decision:
    """Compute pi for every layer, then apply the closed-form test."""
    return decide_general(spec.m, [pi(h) for h in spec.layers], spec.n, prop)


def necessity_bound(parity_a: str, parity_b: str, n: int) -> int:
    """Least odd-layer pi sum admitting a Hamiltonian path between layers of
    the given parities on an odd path: n + 1, n or n - 1."""
    parities = {parity_a, parity_b}
    if not parities <= {"odd", "even"}:
        raise ValueError("parities must be 'odd' or 'even'")
    if parities == {"even"}:
        return n + 1
    if parities == {"odd"}:
        return n - 1
    return n


def decide_uniform(m: int, n: int, pi_h: int, prop: str) -> Decision:
    """P_m[H] with every layer equal to H, in ceiling form for odd m."""
    prop = normalize_property(prop)
    if m % 2 == 0:
        return decide_general(m, [pi_h] * m, n, prop)
    if m < 3 or not 0 <= pi_h <= n - 1:
        raise ValueError("need odd m >= 3 and 0 <= pi <= n - 1")
    k = (m - 1) // 2
    numerator = {"hamiltonian": n, "traceable": n - 1, "ham_connected": n + 1}[prop]
    least_pi = {"hamiltonian": 1, "traceable": 0, "ham_connected": 2}[prop]
    ledger = [_at_least("pi(H)", least_pi, pi_h)] if least_pi else []
    if pi_h == 0:
        # ceiling undefined; only the traceable case survives, as (k+1)*0 >= n-1
        ledger.append(_at_least("(k+1)*pi(H) vs n-1", n - 1, 0))
    else:
        ceiling = math.ceil(numerator / pi_h)
        ledger.append(Condition(f"ceil({numerator}/{pi_h}) <= k+1", k + 1, ceiling, ceiling <= k + 1))
    return Decision.of(ledger, f"uniform odd path P_{m}[H], {prop} in ceiling form")
