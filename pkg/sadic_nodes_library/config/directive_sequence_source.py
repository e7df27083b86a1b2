"""Defines the DirectiveSequenceSource node for choosing the S-adic sequence to study.

This module provides the `DirectiveSequenceSource` class, which turns a named preset or
a directive-sequence text into a `DirectiveSequence` that the language, coding and
construction nodes consume.
"""

import logging
from typing import Any

from griptape_nodes.exe_types.core_types import Parameter, ParameterMode
from griptape_nodes.exe_types.node_types import DataNode
from griptape_nodes.traits.options import Options
from sadic.dirseq_format import parse_dirseq, serialize_dirseq
from sadic.presets import PRESETS
from sadic.subshift import DirectiveSequence

logger = logging.getLogger("griptape_nodes")

# --- Constants ---

CUSTOM = "custom"
SOURCE_CHOICES = [*PRESETS, CUSTOM]
DEFAULT_PRESET = "fibonacci"
EXAMPLE_TEXT = """# Fibonacci
alphabet 0: 0 1
morphism 0:
  0 -> 0 1
  1 -> 0
tail repeat 1
"""


def resolve_directive_sequence(value: Any) -> DirectiveSequence:
    """Accepts a DirectiveSequence, a preset name or directive-sequence text.

    An unconnected input (None or empty) resolves to the default preset.
    """
    if isinstance(value, DirectiveSequence):
        return value
    if value is None or (isinstance(value, str) and not value.strip()):
        return PRESETS[DEFAULT_PRESET]()
    if isinstance(value, str):
        name = value.strip()
        if name in PRESETS:
            return PRESETS[name]()
        return parse_dirseq(value)
    msg = f"Expected a directive sequence, a preset name or directive-sequence text, got {type(value).__name__}"
    raise ValueError(msg)


class DirectiveSequenceSource(DataNode):
    """Node providing a directive sequence (τ_n) from a preset or from text.

    The text format declares alphabets, one block of rules per morphism level, and a
    tail rule telling which levels repeat forever.
    """

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        source_param = Parameter(
            name="source",
            input_types=["str"],
            type="str",
            output_type="str",
            default_value=DEFAULT_PRESET,
            allowed_modes={ParameterMode.PROPERTY},
            tooltip="A named preset, or 'custom' to parse the text below",
            ui_options={"display_name": "Source"},
        )
        source_param.add_trait(Options(choices=SOURCE_CHOICES))
        self.add_parameter(source_param)

        self.add_parameter(
            Parameter(
                name="dirseq_text",
                input_types=["str"],
                type="str",
                output_type="str",
                default_value=EXAMPLE_TEXT,
                allowed_modes={ParameterMode.INPUT, ParameterMode.PROPERTY},
                tooltip="Directive-sequence text, used when the source is 'custom'",
                ui_options={"display_name": "Directive Sequence", "multiline": True, "rows": 8},
            )
        )

        self.add_parameter(
            Parameter(
                name="dirseq",
                input_types=["Any"],
                type="Any",
                output_type="Any",
                default_value=None,
                tooltip="The directive sequence",
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
                name="message",
                output_type="str",
                default_value="",
                tooltip="Status or error messages",
                allowed_modes={ParameterMode.OUTPUT},
                ui_options={"display_name": "Message", "hide": True},
            )
        )

    def process(self) -> None:
        source = self.get_parameter_value("source")
        text = self.get_parameter_value("dirseq_text")
        try:
            dirseq = resolve_directive_sequence(text if source == CUSTOM else source)
            self.parameter_output_values["dirseq"] = dirseq
            self.parameter_output_values["serialized"] = serialize_dirseq(dirseq)
            tail = "finite" if dirseq.tail_period is None else f"tail period {dirseq.tail_period}"
            self.parameter_output_values["message"] = f"✓ Directive sequence with {len(dirseq.levels)} levels, {tail}"
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = True
        except Exception as e:
            error_msg = f"❌ Failed to build directive sequence: {e!s}"
            logger.error(error_msg)
            self.parameter_output_values["dirseq"] = None
            self.parameter_output_values["serialized"] = ""
            self.parameter_output_values["message"] = error_msg
            message_param = self.get_parameter_by_name("message")
            if message_param:
                message_param._ui_options["hide"] = False
            raise RuntimeError(error_msg) from e

    def validate_before_workflow_run(self) -> list[Exception] | None:
        exceptions = []
        source = self.get_parameter_value("source")
        if source not in SOURCE_CHOICES:
            exceptions.append(ValueError(f"Unknown source {source!r}"))
        elif source == CUSTOM:
            text = self.get_parameter_value("dirseq_text")
            if not text or not text.strip():
                exceptions.append(ValueError("Directive-sequence text is required for a custom source"))
            else:
                try:
                    parse_dirseq(text)
                except ValueError as e:
                    exceptions.append(e)
        return exceptions if exceptions else None
