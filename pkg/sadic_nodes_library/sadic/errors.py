"""Exception hierarchy for the sadic kernel.

Callers that only care about the broad category can catch the builtin base
(`ValueError`, `RuntimeError`, `LookupError`); the cli maps each category to an
exit code.
"""

from typing import Any


class SadicError(Exception):
    """Base class for every error raised by the kernel."""


class InvalidArgumentError(SadicError, ValueError):
    """An argument violates a documented precondition."""


class HypothesisViolatedError(InvalidArgumentError):
    """A checked mathematical hypothesis does not hold for the given input.

    Attributes:
        witness: the object (usually a Word) for which the hypothesis fails.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class DirSeqSyntaxError(InvalidArgumentError):
    """A directive-sequence file could not be parsed."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ResourceBudgetError(SadicError, RuntimeError):
    """A configured budget (depth, symbols, window size, enumeration size) was exceeded."""


class GrowthStallError(ResourceBudgetError):
    """The minimal image length stopped growing within the depth budget."""

    def __init__(self, message: str, depth: int, min_length: int) -> None:
        super().__init__(message)
        self.depth = depth
        self.min_length = min_length


class NotFoundError(SadicError, LookupError):
    """A search finished without finding a qualifying object."""


class VerificationFailedError(SadicError, RuntimeError):
    """A verified property failed on a concrete instance.

    Attributes:
        item: short name of the failing property.
        counterexample: a description of the offending window or value.
    """

    def __init__(self, item: str, counterexample: Any = None) -> None:
        super().__init__(f"{item}: {counterexample}")
        self.item = item
        self.counterexample = counterexample


class ConstructionError(SadicError, RuntimeError):
    """An internal guarantee of a construction did not hold."""
