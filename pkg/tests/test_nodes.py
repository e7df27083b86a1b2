import pytest

pytest.importorskip("griptape_nodes")

from config.directive_sequence_source import resolve_directive_sequence  # noqa: E402
from config.language_budgets import resolve_budgets  # noqa: E402
from constructions.negative_family import _parse_counts  # noqa: E402
from sadic.config import DEFAULT_BUDGETS, MAX_DEPTH, Budgets  # noqa: E402
from sadic.errors import DirSeqSyntaxError  # noqa: E402
from sadic.presets import fibonacci, thue_morse  # noqa: E402


class TestResolveDirectiveSequence:
    def test_passes_sequences_through(self):
        dirseq = thue_morse()
        assert resolve_directive_sequence(dirseq) is dirseq

    @pytest.mark.parametrize("value", [None, "", "   "])
    def test_unconnected_input_is_fibonacci(self, value):
        assert resolve_directive_sequence(value) == fibonacci()

    def test_preset_name(self):
        assert resolve_directive_sequence(" thue_morse\n") == thue_morse()

    def test_text(self):
        assert resolve_directive_sequence("morphism 0:\n  0 -> 01\n  1 -> 0\n") == fibonacci()

    def test_bad_text(self):
        with pytest.raises(DirSeqSyntaxError):
            resolve_directive_sequence("fibonacci please")

    def test_bad_type(self):
        with pytest.raises(ValueError, match="int"):
            resolve_directive_sequence(3)


class TestResolveBudgets:
    def test_connected_budgets_win(self):
        budgets = Budgets(max_depth=5)
        assert resolve_budgets(budgets, lambda service, key: "9") is budgets

    def test_library_settings(self):
        budgets = resolve_budgets(None, lambda service, key: "9" if key == MAX_DEPTH else None)
        assert budgets.max_depth == 9
        assert budgets.max_symbols == DEFAULT_BUDGETS.max_symbols


def test_parse_counts():
    assert _parse_counts("2, 2", "Blocks") == (2, 2)
    with pytest.raises(ValueError, match="Blocks"):
        _parse_counts("two", "Blocks")
