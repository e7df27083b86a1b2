import pytest
from conftest import BINARY, word
from hypothesis import given
from hypothesis import strategies as st
from sadic.errors import InvalidArgumentError
from sadic.morphisms import (
    Morphism,
    apply,
    apply_two_sided,
    compose,
    image_lengths,
    is_injective_on_letters,
    is_positive,
    is_proper,
    metrics,
)
from sadic.presets import fibonacci_morphism, thue_morse_morphism
from sadic.words import Alphabet, Word

TERNARY = Alphabet.of_size(3)


@st.composite
def morphisms(draw, source: Alphabet, target: Alphabet) -> Morphism:
    images = [
        Word.of(draw(st.lists(st.sampled_from(target.symbols), min_size=1, max_size=4)), target) for _ in source
    ]
    return Morphism(source, target, tuple(images))


def test_fibonacci_images():
    fib = fibonacci_morphism()
    assert fib(word("0100")) == word("0100101")
    assert metrics(fib) == (2, 1)
    assert image_lengths(fib) == {0: 2, 1: 1}


def test_compose_applies_inner_first():
    square = compose(fibonacci_morphism(), fibonacci_morphism())
    assert square.images == (word("010"), word("01"))
    assert is_positive(square)
    assert not is_positive(fibonacci_morphism())


def test_thue_morse_properties():
    tm = thue_morse_morphism()
    assert not is_proper(tm)
    assert is_injective_on_letters(tm)
    assert compose(tm, tm).images == (word("0110"), word("1001"))


def test_proper_morphism():
    sigma = Morphism.from_mapping(BINARY, BINARY, {0: "001", 1: "01"})
    assert is_proper(sigma)


def test_two_sided_application_marks_center():
    image, center = apply_two_sided(fibonacci_morphism(), word("1"), word("0"))
    assert image == word("001")
    assert center == 1


def test_empty_image_rejected():
    with pytest.raises(InvalidArgumentError, match="empty"):
        Morphism.from_mapping(BINARY, BINARY, {0: "", 1: "0"})


def test_missing_image_rejected():
    with pytest.raises(InvalidArgumentError, match="No image"):
        Morphism.from_mapping(BINARY, BINARY, {0: "01"})


def test_compose_requires_matching_alphabets():
    to_ternary = Morphism.from_mapping(BINARY, TERNARY, {0: "012", 1: "2"})
    with pytest.raises(InvalidArgumentError):
        compose(fibonacci_morphism(), to_ternary)


def test_apply_rejects_foreign_word():
    with pytest.raises(InvalidArgumentError):
        apply(fibonacci_morphism(), Word.parse("2", TERNARY))


@given(morphisms(BINARY, TERNARY), morphisms(TERNARY, BINARY), morphisms(BINARY, TERNARY))
def test_composition_is_associative(sigma, tau, rho):
    assert compose(compose(sigma, tau), rho) == compose(sigma, compose(tau, rho))


@given(
    morphisms(TERNARY, BINARY),
    morphisms(BINARY, TERNARY),
    st.lists(st.integers(0, 1), max_size=8).map(lambda xs: Word.of(xs, BINARY)),
)
def test_composition_agrees_with_application(sigma, tau, w):
    composed = compose(sigma, tau)
    assert apply(composed, w) == apply(sigma, apply(tau, w))
    assert composed.max_length <= sigma.max_length * tau.max_length
    assert composed.min_length >= sigma.min_length * tau.min_length
