"""Defines the SubshiftComplexity node for the factor complexity of an S-adic subshift.

This module provides the `SubshiftComplexity` class, which computes p(n) = #L_n(X^(level))
for n up to a maximum length and reports the first differences, a CSV rendering of the
table and whether the language is exact or a lower approximation.
"""

import logging
from typing import Any

from config.directive_sequence_source import resolve_directive_sequence
from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from sadic.subshift import ComplexityTable, LengthStatus, complexity

logger = logging.getLogger("griptape_nodes")


class SubshiftComplexity(ControlNode):
    """Node computing the complexity function of X^(level)."""

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        self.add_parameter(
            Parameter(
                name="dirseq",
                input_types=["Any", "str"],
                output_type="Any",
                default_value=None,
                tooltip="Directive sequence from a Directive Sequence Source node, or a preset name",
                allowed_modes={ParameterMode.INPUT},
                ui_options={"display_name": "Directive Sequence"},
            )
        )

        self.add_parameter(
            Parameter(
                name="budgets",
                input_types=["Any"],
                output_type="Any",
                default_value=None,
                tooltip="Budgets from a Language Budgets node (library settings when unconnected)",
                allowed_modes={ParameterMode.INPUT},
                ui_options={"display_name": "Budgets"},
            )
        )

        self.add_parameter(
            Parameter(
                name="level",
                output_type="int",
                default_value=0,
                tooltip="Level n of the subshift X^(n)",
                ui_options={"display_name": "Level"},
            )
        )

        self.add_parameter(
            Parameter(
                name="max_length",
                output_type="int",
                default_value=30,
                tooltip="Largest n for which p(n) is computed",
                ui_options={"display_name": "Max Length"},
            )
        )

        self.add_parameter(
            Parameter(
                name="table",
                output_type="list",
                default_value=[],
                tooltip="Rows {n, p, delta}",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Table"},
            )
        )

        self.add_parameter(
            Parameter(
                name="csv",
                output_type="str",
                default_value="",
                tooltip="The table as CSV with header n,p,delta",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "CSV", "multiline": True},
            )
        )

        self.add_parameter(
            Parameter(
                name="max_delta",
                output_type="int",
                default_value=0,
                tooltip="Largest first difference p(n+1) - p(n) in the table",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Max Delta"},
            )
        )

        self.add_parameter(
            Parameter(
                name="exact",
                output_type="bool",
                default_value=False,
                tooltip="False when the table is a lower approximation of the language",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Exact"},
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
            dirseq = resolve_directive_sequence(self.get_parameter_value("dirseq"))
            budgets = resolve_budgets(self.get_parameter_value("budgets"), self.get_config_value)
            level = self.get_parameter_value("level")
            max_length = self.get_parameter_value("max_length")

            table = complexity(dirseq, level, max_length, budgets)
            self._set_success_outputs(table)
        except Exception as e:
            self._set_error_outputs(str(e))

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        if self.get_parameter_value("level") < 0:
            exceptions.append(ValueError("Level must be 0 or greater"))
        if self.get_parameter_value("max_length") < 1:
            exceptions.append(ValueError("Max length must be at least 1"))
        return exceptions if exceptions else None

    def _set_success_outputs(self, table: ComplexityTable) -> None:
        rows: list[dict[str, Any]] = [{"n": n, "p": p, "delta": delta} for n, p, delta in table.rows()]
        exact = table.status == LengthStatus.EXACT
        self.parameter_output_values["table"] = rows
        self.parameter_output_values["csv"] = table.to_csv()
        self.parameter_output_values["max_delta"] = max(table.deltas(), default=0)
        self.parameter_output_values["exact"] = exact

        note = "" if exact else " (lower approximation)"
        self.parameter_output_values["message"] = f"✓ Complexity computed up to n = {table.max_length}{note}"
        message_param = self.get_parameter_by_name("message")
        if message_param:
            message_param._ui_options["hide"] = True

    def _set_error_outputs(self, error_str: str) -> None:
        error_msg = f"❌ Failed to compute complexity: {error_str}"
        logger.error(error_msg)

        self.parameter_output_values["message"] = error_msg
        message_param = self.get_parameter_by_name("message")
        if message_param:
            message_param._ui_options["hide"] = False

        self.parameter_output_values["table"] = []
        self.parameter_output_values["csv"] = ""
        self.parameter_output_values["max_delta"] = 0
        self.parameter_output_values["exact"] = False
