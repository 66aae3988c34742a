"""Exception types shared across the package."""


class BapError(Exception):
    """Base class for all bottleneck-assignment errors."""


class NegativeInfinityWeight(BapError, ValueError):
    pass


class EmptyMatrix(BapError, ValueError):
    pass


class DimensionMismatch(BapError, ValueError):
    pass


class InvalidAssignment(BapError, ValueError):
    pass


class NoFeasibleAssignment(BapError):
    """Every column-perfect matching uses a missing (+inf) edge."""


class NotABottleneckEdge(BapError, ValueError):
    pass


class NotOptimalAssignment(BapError, ValueError):
    pass


class PreconditionViolation(BapError, ValueError):
    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class IndexOutOfRange(BapError, IndexError):
    pass


class BudgetExceeded(BapError):
    pass


class InternalInvariantViolation(BapError, AssertionError):
    """A property the algorithms guarantee was observed to fail at runtime."""


class ParseError(BapError, ValueError):
    pass
