"""Exception types shared across the toolkit."""


class GraphError(ValueError):
    """Invalid graph, invalid parameters, or an operation undefined on the input."""


class DisconnectedGraphError(GraphError):
    pass


class CapacityError(GraphError):
    """Result would not fit in the 64-vertex word-per-row representation."""


class SizeGuardError(GraphError):
    """Input exceeds the size guard of an exact exponential routine."""


class BudgetError(GraphError):
    """Search space exceeds the configured exhaustive budget."""


class UndefinedRemovalError(GraphError):
    """Vertex removal left a disconnected graph, so the quantity is undefined."""
