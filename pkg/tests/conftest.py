import pytest
from hypothesis import strategies as st
from sadic.presets import fibonacci, thue_morse
from sadic.subshift import SubshiftLanguage
from sadic.words import Alphabet, Word

BINARY = Alphabet.binary()


def word(text: str, alphabet: Alphabet = BINARY) -> Word:
    return Word.parse(text, alphabet)


def binary_words(min_size: int = 1, max_size: int = 16) -> st.SearchStrategy[Word]:
    return st.lists(st.integers(0, 1), min_size=min_size, max_size=max_size).map(lambda xs: Word.of(xs, BINARY))


@pytest.fixture
def fib_language() -> SubshiftLanguage:
    return SubshiftLanguage(fibonacci())


@pytest.fixture
def tm_language() -> SubshiftLanguage:
    return SubshiftLanguage(thue_morse())
