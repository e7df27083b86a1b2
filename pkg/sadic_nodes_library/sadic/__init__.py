"""Combinatorics-on-words and S-adic subshift kernel used by the Sadic nodes library."""

from .config import DEFAULT_BUDGETS, Budgets
from .errors import (
    ConstructionError,
    DirSeqSyntaxError,
    GrowthStallError,
    HypothesisViolatedError,
    InvalidArgumentError,
    NotFoundError,
    ResourceBudgetError,
    SadicError,
    VerificationFailedError,
)
from .morphisms import Morphism
from .words import Alphabet, PowerWindow, Word

__all__ = [
    "DEFAULT_BUDGETS",
    "Alphabet",
    "Budgets",
    "ConstructionError",
    "DirSeqSyntaxError",
    "GrowthStallError",
    "HypothesisViolatedError",
    "InvalidArgumentError",
    "Morphism",
    "NotFoundError",
    "PowerWindow",
    "ResourceBudgetError",
    "SadicError",
    "VerificationFailedError",
    "Word",
]
