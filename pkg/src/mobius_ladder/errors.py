"""Exception types shared across the package."""


class InvalidSpecError(ValueError):
    """Raised when (m, n) violates the construction bounds m >= 3, n >= 2."""


class VertexRangeError(ValueError):
    """Raised for a vertex label or dense index outside the graph."""


class HypothesisError(ValueError):
    """Raised when a closed-form or claim is evaluated outside its hypotheses."""


class FixtureFormatError(ValueError):
    """Raised when a reference distance table fails to parse or validate."""
