"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(ValueError):
    """A surface-description document is syntactically malformed."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """A parsed surface description violates a structural invariant."""


class HolonomyError(RuntimeError):
    """The holonomy construction failed numerically (diagnostics in message)."""


class NonHyperbolicError(RuntimeError):
    """A group element has |trace| <= 2: not a closed geodesic of a closed
    hyperbolic surface, so it signals a bug or an invalid representation."""


class BudgetExceededError(RuntimeError):
    """The word enumeration exceeded its node budget; retry with a smaller
    max_word_len or a larger budget."""
