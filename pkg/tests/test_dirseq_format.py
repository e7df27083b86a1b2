import pytest
from conftest import BINARY, word
from sadic.dirseq_format import parse_dirseq, serialize_dirseq
from sadic.errors import DirSeqSyntaxError, InvalidArgumentError
from sadic.presets import fibonacci, negative_family

FIBONACCI_TEXT = """# Fibonacci
alphabet 0: 0 1
morphism 0:
  0 -> 0 1
  1 -> 0   # a comment
tail repeat 1
"""


class TestParse:
    def test_fibonacci(self):
        assert parse_dirseq(FIBONACCI_TEXT) == fibonacci()

    def test_compact_images(self):
        text = "alphabet 0: 0 1\nmorphism 0:\n  0 -> 01\n  1 -> 0\n"
        assert parse_dirseq(text) == fibonacci()

    def test_glyph_alphabet(self):
        dirseq = parse_dirseq("alphabet 0: a b\nmorphism 0:\n  a -> a b\n  b -> a\n")
        assert dirseq == fibonacci()
        assert dirseq.levels[0].source.glyphs == ("a", "b")

    def test_alphabet_from_rules(self):
        dirseq = parse_dirseq("morphism 0:\n  a -> ab\n  b -> a\n")
        assert dirseq.levels[0].images == (word("01"), word("0"))
        assert dirseq.levels[0].target == BINARY

    def test_tail_and_hint(self):
        dirseq = parse_dirseq(FIBONACCI_TEXT.replace("tail repeat 1", "tail finite\nhint primitive"))
        assert dirseq.is_finite
        assert dirseq.primitive_hint


class TestSyntaxErrors:
    def test_unknown_letter_points_at_its_line(self):
        with pytest.raises(DirSeqSyntaxError) as excinfo:
            parse_dirseq(FIBONACCI_TEXT.replace("0 -> 0 1", "0 -> 0 2"))
        assert excinfo.value.line == 4

    def test_is_an_invalid_argument(self):
        with pytest.raises(InvalidArgumentError):
            parse_dirseq("morphism 0:\n  0 -> 0 7\n  1 -> 0\n")

    @pytest.mark.parametrize(
        "text",
        [
            "alphabet 0: 0 1\n",
            "morphism 0:\n  0 -> 0 1\n  1 -> 0\nmorphism 2:\n  0 -> 0\n  1 -> 1\n",
            "alphabet 0: 0 1\nalphabet 0: 0 1\nmorphism 0:\n  0 -> 0 1\n  1 -> 0\n",
            "morphism 0:\n  0 -> 0 1\n  1 -> 0\nrepeat forever\n",
            "morphism 0:\n  0 -> 0 1\n  0 -> 0\n",
            "morphism 0:\n",
        ],
        ids=["no-morphism", "missing-level", "duplicate-alphabet", "unknown-statement", "two-images", "no-rules"],
    )
    def test_rejected(self, text):
        with pytest.raises(DirSeqSyntaxError):
            parse_dirseq(text)

    def test_unknown_statement_line(self):
        with pytest.raises(DirSeqSyntaxError) as excinfo:
            parse_dirseq(FIBONACCI_TEXT + "repeat forever\n")
        assert excinfo.value.line == 7
        assert excinfo.value.column == 1


class TestSerialize:
    def test_canonical_text(self):
        assert serialize_dirseq(fibonacci()) == (
            "alphabet 0: 0 1\nalphabet 1: 0 1\nmorphism 0:\n  0 -> 0 1\n  1 -> 0\ntail repeat 1\n"
        )

    def test_negative_family_reads_back(self):
        dirseq = negative_family()
        text = serialize_dirseq(dirseq)
        assert text.rstrip().endswith("hint primitive")
        assert parse_dirseq(text) == dirseq
