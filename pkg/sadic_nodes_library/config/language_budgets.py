"""Defines the LanguageBudgets node for bounding language and coding computations.

Budgets left at 0 fall back to the library settings (SADIC_MAX_DEPTH, SADIC_MAX_SYMBOLS,
SADIC_WINDOW_LIMIT, SADIC_MAX_LANGUAGE_LENGTH) and then to the kernel defaults.
"""

import logging
from collections.abc import Callable
from dataclasses import replace
from typing import Any

from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import DataNode
from sadic.config import Budgets

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

BUDGET_PARAMETERS = {
    "max_depth": ("Max Depth", "Deepest composition of morphism levels a computation may build"),
    "max_symbols": ("Max Symbols", "Most symbols a single expansion may materialize"),
    "window_limit": ("Window Limit", "Longest power window that may be materialized"),
    "max_language_length": ("Max Word Length", "Longest word length a language query may ask for"),
    "max_enumeration": ("Max Enumeration", "Largest candidate set an exhaustive search may visit"),
}


def resolve_budgets(value: Any, config_getter: Callable[[str, str], Any]) -> Budgets:
    """A connected Budgets value, or the budgets built from library settings."""
    if isinstance(value, Budgets):
        return value
    return Budgets.from_config(config_getter)


class LanguageBudgets(DataNode):
    """Node providing explicit resource budgets to the computation nodes."""

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        for name, (display_name, tooltip) in BUDGET_PARAMETERS.items():
            self.add_parameter(
                Parameter(
                    name=name,
                    input_types=["int"],
                    type="int",
                    output_type="int",
                    default_value=0,
                    allowed_modes={ParameterMode.PROPERTY},
                    tooltip=f"{tooltip} (0 uses the library setting)",
                    ui_options={"display_name": display_name},
                )
            )

        self.add_parameter(
            Parameter(
                name="budgets",
                input_types=["Any"],
                type="Any",
                output_type="Any",
                default_value=None,
                tooltip="Budgets for the language, coding and construction nodes",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Budgets"},
            )
        )

        self.add_parameter(
            Parameter(
                name="message",
                output_type="str",
                default_value="",
                tooltip="Status or error messages",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Message", "hide": True},
            )
        )

    def process(self) -> None:
        try:
            budgets = Budgets.from_config(self.get_config_value)
            overrides = {name: value for name in BUDGET_PARAMETERS if (value := self.get_parameter_value(name))}
            budgets = replace(budgets, **overrides)
            self.parameter_output_values["budgets"] = budgets
            self.parameter_output_values["message"] = (
                f"✓ Budgets: depth {budgets.max_depth}, word length {budgets.max_language_length}"
            )
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = True
        except Exception as e:
            error_msg = f"❌ Failed to configure budgets: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["budgets"] = None
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            raise RuntimeError(error_msg) from e

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        for name, (display_name, _) in BUDGET_PARAMETERS.items():
            value = self.get_parameter_value(name)
            if value is not None and value < 0:
                exceptions.append(ValueError(f"{display_name} must be 0 or greater"))
        return exceptions if exceptions else None
