"""Resource budgets shared by every operation that enumerates or expands words."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, fields, replace
from typing import Any

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
SERVICE = "SymbolicDynamics"
MAX_DEPTH = "SADIC_MAX_DEPTH"
MAX_SYMBOLS = "SADIC_MAX_SYMBOLS"
WINDOW_LIMIT = "SADIC_WINDOW_LIMIT"
MAX_LANGUAGE_LENGTH = "SADIC_MAX_LANGUAGE_LENGTH"

_SETTING_FIELDS = {
    MAX_DEPTH: "max_depth",
    MAX_SYMBOLS: "max_symbols",
    WINDOW_LIMIT: "window_limit",
    MAX_LANGUAGE_LENGTH: "max_language_length",
}


@dataclass(frozen=True, slots=True)
class Budgets:
    """Explicit limits; exceeding any of them raises ResourceBudgetError.

    Attributes:
        max_depth: deepest composition τ_[n,m) a language computation may build.
        max_symbols: total symbols a single expansion may materialize.
        window_limit: longest PowerWindow that may be materialized.
        max_language_length: longest word length a language query may ask for.
        scan_step: length increment between return-word rescans.
        max_rescans: rescans allowed before a scan is declared non-stabilizing.
        max_enumeration: largest candidate set an exhaustive search may visit.
    """

    max_depth: int = 64
    max_symbols: int = 10_000_000
    window_limit: int = 2**20
    max_language_length: int = 4096
    scan_step: int = 32
    max_rescans: int = 8
    max_enumeration: int = 1_000_000

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or value < 1:
                msg = f"Budget {field.name} must be a positive integer, got {value!r}"
                raise ValueError(msg)

    @classmethod
    def from_config(cls, config_getter: Callable[[str, str], Any]) -> "Budgets":
        """Build budgets from library settings, keeping defaults for missing values.

        Args:
            config_getter: function with the signature of a node's get_config_value(service, key).

        Returns:
            Budgets with every parsable setting applied.
        """
        overrides: dict[str, int] = {}
        for key, name in _SETTING_FIELDS.items():
            raw = config_getter(SERVICE, key)
            if raw in (None, "") or (isinstance(raw, str) and raw.startswith("$")):
                continue
            try:
                value = int(raw)
            except (TypeError, ValueError):
                logger.debug("Ignoring non-integer setting %s=%r", key, raw)
                continue
            if value < 1:
                logger.debug("Ignoring non-positive setting %s=%r", key, raw)
                continue
            overrides[name] = value
        return replace(DEFAULT_BUDGETS, **overrides)


DEFAULT_BUDGETS = Budgets()
