"""Defines the RecognizabilityCheck node for the recognizability radius of a block of levels.

The block τ_[level, level+depth) is checked as a coding of X^(level) by X^(level+depth).
With depth 2 the node can also compare the radius of the block with the radii of its two
levels.
"""

import logging

from config.directive_sequence_source import resolve_directive_sequence
from config.language_budgets import resolve_budgets
from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import ControlNode
from sadic.codings import Coding, composition_recognizability_check, recognizability_radius
from sadic.subshift import SubshiftLanguage

logger = logging.getLogger("griptape_nodes")


class RecognizabilityCheck(ControlNode):
    """Node finding the least radius d <= d_max at which every 2d-window has one factorization."""

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
                tooltip="First level of the block",
                ui_options={"display_name": "Level"},
            )
        )

        self.add_parameter(
            Parameter(
                name="depth",
                output_type="int",
                default_value=1,
                tooltip="Number of composed levels",
                ui_options={"display_name": "Depth"},
            )
        )

        self.add_parameter(
            Parameter(
                name="d_max",
                output_type="int",
                default_value=64,
                tooltip="Largest radius tried",
                ui_options={"display_name": "Max Radius"},
            )
        )

        self.add_parameter(
            Parameter(
                name="check_composition",
                output_type="bool",
                default_value=False,
                tooltip="With depth 2, also check the radii of both levels against the block's",
                ui_options={"display_name": "Check Composition"},
            )
        )

        self.add_parameter(
            Parameter(
                name="recognizable",
                output_type="bool",
                default_value=False,
                tooltip="Whether a radius <= d_max was found",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Recognizable"},
            )
        )

        self.add_parameter(
            Parameter(
                name="radius",
                output_type="int",
                default_value=0,
                tooltip="The least radius, 0 when none was found",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Radius"},
            )
        )

        self.add_parameter(
            Parameter(
                name="composition",
                output_type="dict",
                default_value={},
                tooltip="Radii of both levels and of the block, and the status of both implications",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Composition"},
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
            depth = self.get_parameter_value("depth")
            d_max = self.get_parameter_value("d_max")

            upper = SubshiftLanguage(dirseq, level + depth, budgets)
            radius = recognizability_radius(Coding(dirseq.compose_range(level, level + depth), upper), d_max, budgets)

            composition = {}
            if self.get_parameter_value("check_composition") and depth == 2:
                report = composition_recognizability_check(
                    dirseq.morphism(level + 1), dirseq.morphism(level), upper, d_max, budgets
                )
                composition = {
                    "radius_lower": report.radius_tau,
                    "radius_upper": report.radius_sigma,
                    "radius_block": report.radius_composed,
                    "forward": str(report.forward),
                    "backward": str(report.backward),
                    "consistent": report.consistent,
                }

            self.parameter_output_values["recognizable"] = radius is not None
            self.parameter_output_values["radius"] = radius or 0
            self.parameter_output_values["composition"] = composition
            found = f"radius {radius}" if radius is not None else f"no radius up to {d_max}"
            self.parameter_output_values["message"] = f"✓ Checked τ_[{level},{level + depth}): {found}"
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = True
        except Exception as e:
            error_msg = f"❌ Failed to check recognizability: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            self.parameter_output_values["recognizable"] = False
            self.parameter_output_values["radius"] = 0
            self.parameter_output_values["composition"] = {}

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        if self.get_parameter_value("level") < 0:
            exceptions.append(ValueError("Level must be 0 or greater"))
        if self.get_parameter_value("depth") < 1:
            exceptions.append(ValueError("Depth must be at least 1"))
        if self.get_parameter_value("d_max") < 1:
            exceptions.append(ValueError("Max radius must be at least 1"))
        if self.get_parameter_value("check_composition") and self.get_parameter_value("depth") != 2:  # noqa: PLR2004
            exceptions.append(ValueError("The composition check needs depth 2"))
        return exceptions if exceptions else None
