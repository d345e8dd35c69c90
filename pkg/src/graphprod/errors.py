class GraphProdError(Exception):
    pass


class ValidationError(GraphProdError, ValueError):
    """Input failed validation; ``violations`` lists every problem found."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class OracleResolutionError(GraphProdError):
    """The edge oracle cannot decide a pair it was asked about."""


class UnknownVertexError(OracleResolutionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MixedGraphError(GraphProdError, ValueError):
    pass


class BoundTooSmallError(GraphProdError):
    pass


class InternalInvariantError(GraphProdError, AssertionError):
    """A bound the theory guarantees was not met; indicates a bug."""
