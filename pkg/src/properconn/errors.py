"""Exception types shared across the toolkit."""


class GraphError(ValueError):
    """Bad argument: invalid vertex id, empty set, wrong graph shape."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation that needs a connected graph gets a disconnected one."""


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search hit its node cap before reaching an answer."""

    def __init__(self, message, nodes_explored=0):
        super().__init__(message)
        self.nodes_explored = nodes_explored


class ParseError(ValueError):
    """Malformed input file; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
