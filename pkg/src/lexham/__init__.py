"""Hamiltonian cycles and paths in generalized lexicographic products of a path."""

from .decide import (
    Condition,
    Decision,
    decide,
    decide_general,
    decide_ham_connected,
    decide_hamiltonian,
    decide_traceable,
    decide_uniform,
    necessity_bound,
)
from .errors import (
    AssemblyError,
    GraphError,
    InfeasibleBudget,
    InfeasibleConstraints,
    InstanceTooLarge,
    LexhamError,
    ParityError,
)
from .forest import ForestConstraints, constrained_forest, max_linear_forest, pi
from .graphs import (
    LinearForest,
    PathMultigraph,
    ProductVertex,
    ProductWalk,
    SimpleGraph,
    complete_graph,
    cycle_graph,
    degree,
    disjoint_union,
    empty_graph,
    multigraph_degree,
    path_graph,
    star_graph,
)
from .multiple import (
    IndicatorPair,
    LoopPlan,
    build_cycle_multiple_odd,
    build_even_cycle_multiple,
    build_even_hamcon_multiple,
    build_join_cycle_multiple,
    build_lemma_multiple,
    plan_loops,
)
from .oracle import brute_ham_connected, brute_ham_path, brute_hamiltonian, brute_pi, brute_traceable
from .product import ProductSpec, build_product, flatten, unflatten
from .verify import Report, verify_edge_profile, verify_ham_cycle, verify_ham_path, verify_multiple
from .witness import Construction, EulerTrail, assemble, construct, euler_trail, occurrence_counts

__version__ = "0.1.0"
