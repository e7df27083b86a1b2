"""Defines the NegativeFamily node for the linear-complexity family with alternating runs.

Each level maps a -> a^p₁ ā^p₁ ... a^p_ℓ ā^p_ℓ with p_j in [8^j·k, 2·8^j·k). The node builds
the family with every exponent at the bottom of its range and verifies its four properties:
linear complexity, equal image lengths, recognizability at every level and the presence of
the separated runs 1 0^p 1.
"""

import logging

from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from sadic.constructions import NegativeFamilyParams, negative_directive_sequence, negative_family_verify
from sadic.dirseq_format import serialize_dirseq

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

DEFAULT_BLOCKS = "2,2"
DEFAULT_SCALES = "1,1"


def _parse_counts(text: str, name: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        msg = f"{name} must be comma-separated integers, got {text!r}"
        raise ValueError(msg) from e
    return values


class NegativeFamily(ControlNode):
    """Node building and verifying the family."""

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

        self.add_parameter(
            Parameter(
                name="blocks",
                output_type="str",
                default_value=DEFAULT_BLOCKS,
                tooltip="Number of blocks ℓ at each level, comma-separated",
                ui_options={"display_name": "Blocks per Level"},
            )
        )

        self.add_parameter(
            Parameter(
                name="scales",
                output_type="str",
                default_value=DEFAULT_SCALES,
                tooltip="Scale k at each level, comma-separated",
                ui_options={"display_name": "Scales"},
            )
        )

        self.add_parameter(
            Parameter(
                name="depth",
                output_type="int",
                default_value=2,
                tooltip="Number of levels verified",
                ui_options={"display_name": "Depth"},
            )
        )

        self.add_parameter(
            Parameter(
                name="k_max",
                output_type="int",
                default_value=2000,
                tooltip="Largest length at which the complexity bound is checked",
                ui_options={"display_name": "Max Length"},
            )
        )

        self.add_parameter(
            Parameter(
                name="dirseq",
                output_type="Any",
                default_value=None,
                tooltip="The family as a directive sequence",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Directive Sequence"},
            )
        )

        self.add_parameter(
            Parameter(
                name="serialized",
                output_type="str",
                default_value="",
                tooltip="Canonical text of the directive sequence",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Canonical Text", "multiline": True},
            )
        )

        self.add_parameter(
            Parameter(
                name="report",
                output_type="str",
                default_value="",
                tooltip="PASS/FAIL line per property and the largest p(k)/k",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Report", "multiline": True},
            )
        )

        self.add_parameter(
            Parameter(
                name="passed",
                output_type="bool",
                default_value=False,
                tooltip="Whether every property holds",
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
            params = NegativeFamilyParams.minimal(
                _parse_counts(self.get_parameter_value("blocks"), "Blocks"),
                _parse_counts(self.get_parameter_value("scales"), "Scales"),
            )
            dirseq = negative_directive_sequence(params)
            report = negative_family_verify(
                params,
                self.get_parameter_value("depth"),
                self.get_parameter_value("k_max"),
                budgets,
                raise_on_failure=False,
            )

            self.parameter_output_values["dirseq"] = dirseq
            self.parameter_output_values["serialized"] = serialize_dirseq(dirseq)
            self.parameter_output_values["report"] = "\n".join(report.lines())
            self.parameter_output_values["passed"] = report.passed
            message_param = self.get_parameter_by_name("message")
            if report.passed:
                self.parameter_output_values["message"] = f"✓ All properties verified to depth {report.depth}"
                if message_param:
                    message_param._ui_options["hide"] = True
            else:
                failed = ", ".join(item.name for item in report.items if not item.passed)
                self.parameter_output_values["message"] = f"❌ Failed properties: {failed}"
                logger.error("❌ Failed properties: %s", failed)
                if message_param:
                    message_param._ui_options["hide"] = False
        except Exception as e:
            error_msg = f"❌ Failed to build the family: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            self.parameter_output_values["dirseq"] = None
            self.parameter_output_values["serialized"] = ""
            self.parameter_output_values["report"] = ""
            self.parameter_output_values["passed"] = False

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        try:
            blocks = _parse_counts(self.get_parameter_value("blocks"), "Blocks")
            scales = _parse_counts(self.get_parameter_value("scales"), "Scales")
            if len(blocks) != len(scales):
                exceptions.append(ValueError("Blocks and scales need one value per level"))
        except ValueError as e:
            exceptions.append(e)
        if self.get_parameter_value("depth") < 1:
            exceptions.append(ValueError("Depth must be at least 1"))
        if self.get_parameter_value("k_max") < 1:
            exceptions.append(ValueError("Max length must be at least 1"))
        return exceptions if exceptions else None
