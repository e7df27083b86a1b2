"""Defines the SpecialWords node for right- and left-special words of a subshift."""

import logging

from config.directive_sequence_source import resolve_directive_sequence
from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from griptape_nodes.traits.options import Options
from sadic.subshift import SubshiftLanguage, left_special, right_special

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

SIDES = ["right", "left"]


class SpecialWords(ControlNode):
    """Node listing the special words of length n and the growth p(n+1) - p(n) they bound.

    On an exact language #RS_n <= p(n+1) - p(n) <= #A·#RS_n is checked while the words
    are collected; a violation is reported as a failure.
    """

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
                name="length",
                output_type="int",
                default_value=5,
                tooltip="Length of the special words",
                ui_options={"display_name": "Length"},
            )
        )

        side_param = Parameter(
            name="side",
            input_types=["str"],
            type="str",
            output_type="str",
            default_value="right",
            allowed_modes={ParameterMode.PROPERTY},
            tooltip="Right-special words extend to the right in two ways, left-special to the left",
            ui_options={"display_name": "Side"},
        )
        side_param.add_trait(Options(choices=SIDES))
        self.add_parameter(side_param)

        self.add_parameter(
            Parameter(
                name="words",
                output_type="list",
                default_value=[],
                tooltip="The special words, sorted",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Special Words"},
            )
        )

        self.add_parameter(
            Parameter(
                name="growth",
                output_type="int",
                default_value=0,
                tooltip="p(n+1) - p(n)",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Growth"},
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
            n = self.get_parameter_value("length")
            lang = SubshiftLanguage(dirseq, self.get_parameter_value("level"), budgets)

            finder = right_special if self.get_parameter_value("side") == "right" else left_special
            words = sorted(finder(lang, n))
            self.parameter_output_values["words"] = [str(w) for w in words]
            self.parameter_output_values["growth"] = lang.count(n + 1) - lang.count(n)
            self.parameter_output_values["message"] = f"✓ Found {len(words)} special words of length {n}"
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = True
        except Exception as e:
            error_msg = f"❌ Failed to find special words: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            self.parameter_output_values["words"] = []
            self.parameter_output_values["growth"] = 0

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        if self.get_parameter_value("length") < 1:
            exceptions.append(ValueError("Length must be at least 1"))
        if self.get_parameter_value("side") not in SIDES:
            exceptions.append(ValueError(f"Side must be one of {SIDES}"))
        return exceptions if exceptions else None
