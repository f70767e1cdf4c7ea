"""Exception hierarchy shared by the whole engine.

Exit-code mapping used by the CLI: UsageError -> 2, ResourceBudgetError -> 3,
verification failures -> 1.
"""


class SpindleError(Exception):
    """Base class for all engine errors."""


class UsageError(SpindleError):
    """Invalid user input (bad type/rank pair, malformed weight, ...)."""


class ResourceBudgetError(SpindleError):
    """A computation would exceed a configured enumeration budget."""

    def __init__(self, what, needed, budget):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed}, exceeds budget {budget}")


class ExactDivisionError(SpindleError, ArithmeticError):
    """A division that a formula guarantees to be exact was not exact."""


class DomainError(SpindleError):
    """Operation applied outside its mathematical domain (e.g. weight not
    in the root lattice)."""


class InternalConsistencyError(SpindleError):
    """Two routes that must agree disagreed; signals a bug, not bad input."""
