"""Defines the RunVerification node for running the kernel's verification suites."""

import logging

from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from griptape_nodes.traits.options import Options
from sadic.verification import SUITES, run_suite

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

SUITE_CHOICES = [*SUITES, "all"]


class RunVerification(ControlNode):
    """Node running a named suite and reporting one PASS/FAIL line per check."""

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

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

        suite_param = Parameter(
            name="suite",
            input_types=["str"],
            type="str",
            output_type="str",
            default_value="words",
            allowed_modes={ParameterMode.PROPERTY},
            tooltip="Suite to run",
            ui_options={"display_name": "Suite"},
        )
        suite_param.add_trait(Options(choices=SUITE_CHOICES))
        self.add_parameter(suite_param)

        self.add_parameter(
            Parameter(
                name="seed",
                output_type="int",
                default_value=0,
                tooltip="Seed for the randomized checks",
                ui_options={"display_name": "Seed"},
            )
        )

        self.add_parameter(
            Parameter(
                name="lines",
                output_type="list",
                default_value=[],
                tooltip="PASS <check> or FAIL <check> <counterexample>",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Results"},
            )
        )

        self.add_parameter(
            Parameter(
                name="passed",
                output_type="bool",
                default_value=False,
                tooltip="Whether every check passed",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Passed"},
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
            budgets = resolve_budgets(self.get_parameter_value("budgets"), self.get_config_value)
            results = run_suite(self.get_parameter_value("suite"), self.get_parameter_value("seed"), budgets)
        except Exception as e:
            error_msg = f"❌ Failed to run verification: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            self.parameter_output_values["lines"] = []
            self.parameter_output_values["passed"] = False
            return

        failed = [result for result in results if not result.passed]
        self.parameter_output_values["lines"] = [result.line() for result in results]
        self.parameter_output_values["passed"] = not failed
        message_param = self.get_parameter_by_name("message")
        if failed:
            error_msg = f"❌ {len(failed)} of {len(results)} checks failed: {', '.join(r.name for r in failed)}"
            logger.error(error_msg)
            self.parameter_output_values["message"] = error_msg
            if message_param:
                message_param._ui_options["hide"] = False
        else:
            self.parameter_output_values["message"] = f"✓ All {len(results)} checks passed"
            if message_param:
                message_param._ui_options["hide"] = True

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        if self.get_parameter_value("suite") not in SUITE_CHOICES:
            exceptions.append(ValueError(f"Suite must be one of {SUITE_CHOICES}"))
        return exceptions if exceptions else None
