"""Exception types shared across the package."""


class SumsetError(Exception):
    """Base class for all library errors."""


class EmptySet(SumsetError):
    """An operation that needs a nonempty set received an empty one."""


class NotCollinear(SumsetError):
    """A one-dimensional operation received a set that is not contained in a line."""


class ModeMismatch(SumsetError):
    """The inputs violate the chosen bound mode's preconditions."""


class InvalidSpec(SumsetError):
    """A family/parameter record violates its invariants."""


class HypothesisViolated(SumsetError):
    """The inputs fall outside the hypotheses of the requested characterization."""


class DegenerateProjection(SumsetError):
    """A polygon has zero horizontal projection where a positive one is required."""


class InvalidAmount(SumsetError):
    """A stretch amount was negative."""


class ParseError(SumsetError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ConsistencyError(SumsetError):
    """A verified theorem failed on concrete data; always a bug or a real counterexample."""
