"""Exception hierarchy shared by all modules."""


class LexhamError(Exception):
    """Base class for library errors."""


class GraphError(LexhamError, ValueError):
    """A graph, multigraph or forest violates its structural invariants."""


class InstanceTooLarge(LexhamError):
    """The instance exceeds the limit of an exact search."""


class InfeasibleBudget(LexhamError, ValueError):
    """Loop budgets cannot satisfy the requested plan."""


class InfeasibleConstraints(LexhamError, ValueError):
    """A constrained forest cannot be produced from the maximum forest."""


class ParityError(LexhamError, ValueError):
    """Endpoint layers have the wrong parity for the requested construction."""


class AssemblyError(LexhamError, ValueError):
    """Forests do not fit the Euler trail they are substituted into."""
