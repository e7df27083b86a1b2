"""Named morphisms and directive sequences used by the nodes, the cli and the tests."""

from .constructions import NegativeFamilyParams, negative_directive_sequence
from .morphisms import Morphism
from .subshift import DirectiveSequence
from .words import Alphabet

BINARY = Alphabet.binary()
UNARY = Alphabet.of_size(1)


def fibonacci_morphism() -> Morphism:
    """0 -> 01, 1 -> 0."""
    return Morphism.from_mapping(BINARY, BINARY, {0: "01", 1: "0"})


def thue_morse_morphism() -> Morphism:
    """0 -> 01, 1 -> 10."""
    return Morphism.from_mapping(BINARY, BINARY, {0: "01", 1: "10"})


def fibonacci() -> DirectiveSequence:
    return DirectiveSequence((fibonacci_morphism(),), tail_period=1)


def thue_morse() -> DirectiveSequence:
    return DirectiveSequence((thue_morse_morphism(),), tail_period=1)


def doubling() -> DirectiveSequence:
    """The single-letter fixed point 0 -> 00."""
    return DirectiveSequence((Morphism.from_mapping(UNARY, UNARY, {0: "00"}),), tail_period=1)


def swap() -> DirectiveSequence:
    """0 -> 1, 1 -> 0: letters never grow."""
    return DirectiveSequence((Morphism.from_mapping(BINARY, BINARY, {0: "1", 1: "0"}),), tail_period=1)


def periodic_orbit() -> DirectiveSequence:
    """0 -> 01, 1 -> 01, whose subshift is the orbit of (01)^ℤ."""
    return DirectiveSequence((Morphism.from_mapping(BINARY, BINARY, {0: "01", 1: "01"}),), tail_period=1)


def negative_family() -> DirectiveSequence:
    """Two blocks per level with the smallest exponents, 0 -> 0^8 1^8 0^64 1^64."""
    return negative_directive_sequence(NegativeFamilyParams.minimal((2, 2), (1, 1)))


PRESETS = {
    "fibonacci": fibonacci,
    "thue_morse": thue_morse,
    "doubling": doubling,
    "swap": swap,
    "periodic_orbit": periodic_orbit,
    "negative_family": negative_family,
}
