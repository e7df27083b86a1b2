"""Defines the ReturnWordCoding node for codings of a subshift by return words.

This module provides the `ReturnWordCoding` class. It codes X^(level) by its return words
to either a cylinder [past.future] or the set of points starting with a right-special word
of a given length, and reports the morphism, its recognizability radius and, for the
right-special coding, the checked size bounds.
"""

import logging
from typing import Any

from config.directive_sequence_source import resolve_directive_sequence
from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from griptape_nodes.traits.options import Options
from sadic.codings import ClopenSet, Coding, clopen_coding, special_coding
from sadic.subshift import SubshiftLanguage
from sadic.words import Word

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

CYLINDER = "cylinder"
RIGHT_SPECIAL = "right_special"
MODES = [CYLINDER, RIGHT_SPECIAL]


class ReturnWordCoding(ControlNode):
    """Node building the coding σ: B -> A whose images are the return words."""

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

        mode_param = Parameter(
            name="mode",
            input_types=["str"],
            type="str",
            output_type="str",
            default_value=CYLINDER,
            allowed_modes={ParameterMode.PROPERTY},
            tooltip="Return words to a cylinder, or to the right-special words of a given length",
            ui_options={"display_name": "Mode"},
        )
        mode_param.add_trait(Options(choices=MODES))
        self.add_parameter(mode_param)

        self.add_parameter(
            Parameter(
                name="past",
                output_type="str",
                default_value="",
                tooltip="Cylinder mode: the word read just before position 0",
                ui_options={"display_name": "Past"},
            )
        )

        self.add_parameter(
            Parameter(
                name="future",
                output_type="str",
                default_value="1",
                tooltip="Cylinder mode: the word read from position 0",
                ui_options={"display_name": "Future"},
            )
        )

        self.add_parameter(
            Parameter(
                name="length",
                output_type="int",
                default_value=3,
                tooltip="Right-special mode: length n of the special words",
                ui_options={"display_name": "Length"},
            )
        )

        self.add_parameter(
            Parameter(
                name="coding",
                output_type="Any",
                default_value=None,
                tooltip="The coding (morphism, upper language and radius)",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Coding"},
            )
        )

        self.add_parameter(
            Parameter(
                name="return_words",
                output_type="list",
                default_value=[],
                tooltip="Return words in the order of the new letters",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Return Words"},
            )
        )

        self.add_parameter(
            Parameter(
                name="radius",
                output_type="int",
                default_value=0,
                tooltip="Recognizability radius of the coding",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Radius"},
            )
        )

        self.add_parameter(
            Parameter(
                name="bounds",
                output_type="dict",
                default_value={},
                tooltip="Right-special mode: {property: {value, bound}}",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Bounds"},
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
            lang = SubshiftLanguage(dirseq, self.get_parameter_value("level"), budgets)

            bounds: dict[str, Any] = {}
            if self.get_parameter_value("mode") == RIGHT_SPECIAL:
                report = special_coding(lang, self.get_parameter_value("length"), budgets=budgets)
                coding = report.coding
                bounds = {name: {"value": value, "bound": bound} for name, (value, bound) in report.items.items()}
            else:
                past = Word.parse(self.get_parameter_value("past"), lang.alphabet)
                future = Word.parse(self.get_parameter_value("future"), lang.alphabet)
                coding = clopen_coding(lang, ClopenSet.cylinder(past, future), budgets=budgets)

            self._set_success_outputs(coding, bounds)
        except Exception as e:
            self._set_error_outputs(str(e))

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        mode = self.get_parameter_value("mode")
        if mode not in MODES:
            exceptions.append(ValueError(f"Mode must be one of {MODES}"))
        if mode == CYLINDER and not (self.get_parameter_value("past") or self.get_parameter_value("future")):
            exceptions.append(ValueError("A cylinder needs a nonempty past or future word"))
        if mode == RIGHT_SPECIAL and self.get_parameter_value("length") < 1:
            exceptions.append(ValueError("Length must be at least 1"))
        return exceptions if exceptions else None

    def _set_success_outputs(self, coding: Coding, bounds: dict[str, Any]) -> None:
        images = [str(image) for image in coding.sigma.images]
        self.parameter_output_values["coding"] = coding
        self.parameter_output_values["return_words"] = images
        self.parameter_output_values["radius"] = coding.reco_radius
        self.parameter_output_values["bounds"] = bounds

        self.parameter_output_values["message"] = (
            f"✓ Coded by {len(images)} return words, recognizable with radius {coding.reco_radius}"
        )
        message_param = self.get_parameter_by_name("message")
        if message_param:
            message_param._ui_options["hide"] = True

    def _set_error_outputs(self, error_str: str) -> None:
        error_msg = f"❌ Failed to build the return-word coding: {error_str}"
        logger.error(error_msg)

        self.parameter_output_values["message"] = error_msg
        message_param = self.get_parameter_by_name("message")
        if message_param:
            message_param._ui_options["hide"] = False

        self.parameter_output_values["coding"] = None
        self.parameter_output_values["return_words"] = []
        self.parameter_output_values["radius"] = 0
        self.parameter_output_values["bounds"] = {}
