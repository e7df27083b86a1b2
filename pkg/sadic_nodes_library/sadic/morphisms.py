"""Morphisms (substitutions) between free monoids."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import InvalidArgumentError
from .words import Alphabet, Word

logger = logging.getLogger("griptape_nodes")


@dataclass(frozen=True, slots=True)
class Morphism:
    """A map sending each letter of `source` to a nonempty word over `target`.

    `images[i]` is the image of `source.symbols[i]`. Equality is extensional.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]
    _table: tuple[bytes | None, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if len(images) != len(self.source):
            msg = f"Morphism needs {len(self.source)} images, got {len(images)}"
            raise InvalidArgumentError(msg)
        for letter, image in zip(self.source.symbols, images, strict=True):
            if not len(image):
                msg = f"Image of letter {self.source.glyph(letter)} is empty"
                raise InvalidArgumentError(msg)
            if image.alphabet != self.target:
                msg = f"Image of letter {self.source.glyph(letter)} is not over the target alphabet {self.target}"
                raise InvalidArgumentError(msg)
        table: list[bytes | None] = [None] * 256
        for letter, image in zip(self.source.symbols, images, strict=True):
            table[letter] = image.symbols
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_table", tuple(table))

    @classmethod
    def from_mapping(cls, source: Alphabet, target: Alphabet, mapping: Mapping[int, Word | str]) -> "Morphism":
        """Builds a morphism from letter -> image, parsing string images over the target."""
        missing = [s for s in source.symbols if s not in mapping]
        if missing:
            msg = f"No image given for letters {[source.glyph(s) for s in missing]}"
            raise InvalidArgumentError(msg)
        images = []
        for letter in source.symbols:
            image = mapping[letter]
            images.append(Word.parse(image, target) if isinstance(image, str) else image)
        return cls(source, target, tuple(images))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet, tuple(Word._wrap(bytes([s]), alphabet) for s in alphabet.symbols))

    def image(self, letter: int) -> Word:
        if letter not in self.source:
            msg = f"Letter {letter} is not in the source alphabet {self.source}"
            raise InvalidArgumentError(msg)
        return self.images[self.source.symbols.index(letter)]

    def image_bytes(self, symbols: bytes) -> bytes:
        table = self._table
        try:
            return b"".join([table[s] for s in symbols])  # type: ignore[misc]
        except TypeError as e:
            outside = sorted({s for s in symbols if table[s] is None})
            msg = f"Letters {outside} are not in the source alphabet {self.source}"
            raise InvalidArgumentError(msg) from e

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    @property
    def max_length(self) -> int:
        """|σ|, the longest image length."""
        return max(len(image) for image in self.images)

    @property
    def min_length(self) -> int:
        """⟨σ⟩, the shortest image length."""
        return min(len(image) for image in self.images)

    def __str__(self) -> str:
        return ", ".join(f"{self.source.glyph(s)}->{img}" for s, img in zip(self.source.symbols, self.images, strict=True))


def apply(sigma: Morphism, w: Word) -> Word:
    if w.alphabet != sigma.source:
        msg = f"Word {w} is over {w.alphabet}, expected the source alphabet {sigma.source}"
        raise InvalidArgumentError(msg)
    return Word._wrap(sigma.image_bytes(w.symbols), sigma.target)


def apply_two_sided(sigma: Morphism, left: Word, right: Word) -> tuple[Word, int]:
    """σ(left)·σ(right) with the index of the center (the start of σ(right))."""
    left_image = apply(sigma, left)
    return left_image + apply(sigma, right), len(left_image)


def compose(sigma: Morphism, tau: Morphism) -> Morphism:
    """σ∘τ, mapping c to σ(τ(c))."""
    if tau.target != sigma.source:
        msg = f"Cannot compose: inner target {tau.target} differs from outer source {sigma.source}"
        raise InvalidArgumentError(msg)
    return Morphism(tau.source, sigma.target, tuple(apply(sigma, image) for image in tau.images))


def metrics(sigma: Morphism) -> tuple[int, int]:
    return sigma.max_length, sigma.min_length


def is_positive(sigma: Morphism) -> bool:
    """Every image contains every target letter."""
    return all(image.letters() >= sigma.target._members for image in sigma.images)


def is_proper(sigma: Morphism) -> bool:
    """All images start with one common letter and end with one common letter."""
    return len({image.symbols[0] for image in sigma.images}) == 1 and len({image.symbols[-1] for image in sigma.images}) == 1


def is_injective_on_letters(sigma: Morphism) -> bool:
    return len(set(sigma.images)) == len(sigma.images)


def image_lengths(sigma: Morphism) -> dict[int, int]:
    return {letter: len(image) for letter, image in zip(sigma.source.symbols, sigma.images, strict=True)}
