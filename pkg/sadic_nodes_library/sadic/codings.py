"""Factorizations, recognizability and codings by return words.

Everything here works on finite windows with explicit anchors. A coding (Y, σ)
keeps Y only as a language provider; a window of X of length 2d is resolved by
expanding every legal Y-word long enough to cover d symbols on both sides of
its central letter.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from enum import StrEnum
from functools import lru_cache
from math import ceil

from .config import DEFAULT_BUDGETS, Budgets
from .errors import (
    ConstructionError,
    InvalidArgumentError,
    NotFoundError,
    ResourceBudgetError,
    VerificationFailedError,
)
from .morphisms import Morphism, compose
from .subshift import DirectiveSequence, LanguageProvider, LengthStatus, SubshiftLanguage, as_language, right_special
from .words import Alphabet, Word

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
DEFAULT_SCAN_LENGTH = 32
WINDOW_CACHE_SIZE = 64


@dataclass(frozen=True)
class Factorization:
    """x = S^k σ(y) seen through a finite window of y.

    Attributes:
        sigma: the morphism.
        k: offset inside σ(y_0), 0 <= k < |σ(y_0)|.
        window: consecutive letters of y.
        origin: index of y_0 inside the window.
    """

    sigma: Morphism
    k: int
    window: Word
    origin: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.origin < len(self.window):
            msg = f"Origin {self.origin} is outside a window of length {len(self.window)}"
            raise InvalidArgumentError(msg)
        if self.window.alphabet != self.sigma.source:
            msg = f"Window {self.window} is not over the source alphabet {self.sigma.source}"
            raise InvalidArgumentError(msg)
        center = len(self.sigma.image(self.window.symbols[self.origin]))
        if not 0 <= self.k < center:
            msg = f"Offset {self.k} must lie in [0, {center})"
            raise InvalidArgumentError(msg)

    @property
    def cut_range(self) -> range:
        return range(-self.origin, len(self.window) - self.origin + 1)

    def cut(self, j: int) -> int:
        """c_j = -k + |σ(y_[0,j))| for j >= 0 and -k - |σ(y_[j,0))| for j < 0."""
        if j not in self.cut_range:
            msg = f"Cut index {j} is outside [{self.cut_range.start}, {self.cut_range.stop - 1}]"
            raise InvalidArgumentError(msg)
        symbols = self.window.symbols
        if j >= 0:
            return -self.k + len(self.sigma.image_bytes(symbols[self.origin : self.origin + j]))
        return -self.k - len(self.sigma.image_bytes(symbols[self.origin + j : self.origin]))

    def cuts(self) -> dict[int, int]:
        return {j: self.cut(j) for j in self.cut_range}


def cut_function(factorization: Factorization, j: int) -> int:
    return factorization.cut(j)


@dataclass(frozen=True)
class ClopenSet:
    """A finite union of cylinders {x : x_[-|u|,|v|) = uv}."""

    cylinders: frozenset[tuple[Word, Word]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cylinders", frozenset(self.cylinders))
        if not self.cylinders:
            msg = "A clopen set needs at least one cylinder"
            raise InvalidArgumentError(msg)

    @classmethod
    def cylinder(cls, u: Word, v: Word) -> "ClopenSet":
        return cls(frozenset({(u, v)}))

    @classmethod
    def full(cls, alphabet: Alphabet) -> "ClopenSet":
        return cls.cylinder(Word.empty(alphabet), Word.empty(alphabet))

    @classmethod
    def starting_with(cls, words: Iterable[Word]) -> "ClopenSet":
        """{x : x_[0,n) in words}."""
        return cls(frozenset((Word.empty(w.alphabet), w) for w in words))

    @property
    def left(self) -> int:
        return max(len(u) for u, _ in self.cylinders)

    @property
    def right(self) -> int:
        return max(len(v) for _, v in self.cylinders)

    @property
    def radius(self) -> int:
        return max(self.left, self.right)

    def positions(self, symbols: bytes) -> list[int]:
        """Indices i of a finite word, decidable from it alone, at which the shifted point lies in the set."""
        keys = [(len(u), u.symbols + v.symbols) for u, v in self.cylinders]
        return [
            i
            for i in range(self.left, len(symbols) - self.right + 1)
            if any(symbols[i - size : i - size + len(key)] == key for size, key in keys)
        ]


@dataclass(frozen=True)
class Coding:
    """A morphism σ: B -> A with the language of its upper subshift Y."""

    sigma: Morphism
    upper_language: LanguageProvider
    reco_radius: int | None = None


class ImageLanguage:
    """Language of the union of shifts of σ(Z), read from legal words of Z."""

    def __init__(self, base: LanguageProvider, sigma: Morphism) -> None:
        if base.alphabet != sigma.source:
            msg = f"Language over {base.alphabet} cannot feed a morphism reading {sigma.source}"
            raise InvalidArgumentError(msg)
        self.base = base
        self.sigma = sigma
        self._words: dict[int, frozenset[Word]] = {}

    @property
    def alphabet(self) -> Alphabet:
        return self.sigma.target

    def status(self, length: int) -> LengthStatus:
        return self.base.status(ceil(length / self.sigma.min_length) + 1)

    def words(self, length: int) -> frozenset[Word]:
        if length not in self._words:
            found: set[bytes] = set()
            for z in self.base.words(ceil(length / self.sigma.min_length) + 1):
                image = self.sigma.image_bytes(z.symbols)
                found.update(image[i : i + length] for i in range(len(image) - length + 1))
            self._words[length] = frozenset(Word._wrap(s, self.alphabet) for s in found)
        return self._words[length]


def image_language(base: LanguageProvider, sigma: Morphism) -> ImageLanguage:
    return ImageLanguage(base, sigma)


class ReturnWordLanguage:
    """Language of the coding of X by return words to a clopen set.

    Legal words are read off the occurrence sequence of the clopen set in legal words of X.
    """

    def __init__(
        self, base: LanguageProvider, clopen: ClopenSet, letters: Mapping[bytes, int], alphabet: Alphabet, gap: int
    ) -> None:
        self.base = base
        self.clopen = clopen
        self.letters = dict(letters)
        self._alphabet = alphabet
        self.gap = gap
        self._words: dict[int, frozenset[Word]] = {}

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    def _scan_length(self, length: int) -> int:
        return length * self.gap + self.clopen.left + self.clopen.right

    def status(self, length: int) -> LengthStatus:
        return self.base.status(self._scan_length(length))

    def code(self, symbols: bytes) -> bytes:
        """The return-word letters read between consecutive occurrences inside a legal word of X."""
        positions = self.clopen.positions(symbols)
        try:
            return bytes(self.letters[symbols[p:q]] for p, q in zip(positions, positions[1:], strict=False))
        except KeyError as e:
            msg = f"Return word {e.args[0]!r} is missing from the coding alphabet"
            raise ConstructionError(msg) from e

    def words(self, length: int) -> frozenset[Word]:
        if length not in self._words:
            found: set[bytes] = set()
            for x in self.base.words(self._scan_length(length)):
                coded = self.code(x.symbols)
                found.update(coded[i : i + length] for i in range(len(coded) - length + 1))
            self._words[length] = frozenset(Word._wrap(s, self._alphabet) for s in found)
        return self._words[length]


@lru_cache(maxsize=WINDOW_CACHE_SIZE)
def _window_table(coding: Coding, d: int, max_entries: int) -> Mapping[bytes, frozenset[tuple[int, int]]]:
    """Every centered 2d-window of σ(Y) mapped to its (k, y_0) pairs."""
    sigma = coding.sigma
    half = ceil(d / sigma.min_length) + 1
    table: dict[bytes, set[tuple[int, int]]] = defaultdict(set)
    entries = 0
    for v in coding.upper_language.words(2 * half + 1):
        symbols = v.symbols
        left = sigma.image_bytes(symbols[:half])
        center = sigma.image_bytes(symbols[half : half + 1])
        image = left + center + sigma.image_bytes(symbols[half + 1 :])
        entries += len(center)
        if entries > max_entries:
            msg = f"Recognizability at radius {d} needs more than {max_entries} windows"
            raise ResourceBudgetError(msg)
        for k in range(len(center)):
            c = len(left) + k
            table[image[c - d : c + d]].add((k, symbols[half]))
    return {window: frozenset(pairs) for window, pairs in table.items()}


def window_factorizations(
    coding: Coding, w: Word, d: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list[tuple[int, int]]:
    """All (k, y_0) compatible with the centered window w = x_[-d,d)."""
    if d < 1 or len(w) != 2 * d:
        msg = f"Window must have length 2d with d >= 1, got |w| = {len(w)}, d = {d}"
        raise InvalidArgumentError(msg)
    return sorted(_window_table(coding, d, budgets.max_enumeration).get(w.symbols, ()))


def is_recognizable_at(coding: Coding, d: int, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    return all(len(pairs) == 1 for pairs in _window_table(coding, d, budgets.max_enumeration).values())


def recognizability_radius(coding: Coding, d_max: int, budgets: Budgets = DEFAULT_BUDGETS) -> int | None:
    """Least d <= d_max at which every legal 2d-window has a single (k, y_0).

    Recognizability at radius d implies it at every larger radius, so the search bisects.
    """
    if d_max < 1:
        msg = f"d_max must be at least 1, got {d_max}"
        raise InvalidArgumentError(msg)
    if not is_recognizable_at(coding, d_max, budgets):
        return None
    low, high = 1, d_max
    while low < high:
        middle = (low + high) // 2
        logger.debug("Checking recognizability of %s at radius %d", coding.sigma, middle)
        if is_recognizable_at(coding, middle, budgets):
            high = middle
        else:
            low = middle + 1
    return low


def with_radius(coding: Coding, d_max: int, budgets: Budgets = DEFAULT_BUDGETS) -> Coding:
    """The coding with reco_radius set; raises NotFoundError when no radius <= d_max works."""
    radius = recognizability_radius(coding, d_max, budgets)
    if radius is None:
        msg = f"{coding.sigma} is not recognizable up to radius {d_max}"
        raise NotFoundError(msg)
    return replace(coding, reco_radius=radius)


def refactorize(
    coding: Coding, y_word: Word, d: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list[tuple[int, list[tuple[int, int]]]]:
    """For each cut of σ(y_word) with room d on both sides, the factorizations its window admits."""
    image = coding.sigma.image_bytes(y_word.symbols)
    table = _window_table(coding, d, budgets.max_enumeration)
    results = []
    cut = 0
    for j, letter in enumerate(y_word.symbols):
        if cut - d >= 0 and cut + d <= len(image):
            results.append((j, sorted(table.get(image[cut - d : cut + d], ()))))
        cut += len(coding.sigma.image_bytes(bytes([letter])))
    return results


def verify_round_trip(coding: Coding, d: int, length: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Checks that re-factorizing σ(v) recovers (0, v_j) at every cut, for all legal v of the given length.

    Returns:
        The number of cuts checked.
    """
    checked = 0
    for v in sorted(coding.upper_language.words(length)):
        for j, pairs in refactorize(coding, v, d, budgets):
            if pairs != [(0, v.symbols[j])]:
                raise VerificationFailedError("round-trip", f"{v} at cut {j}: {pairs}")
            checked += 1
    return checked


class ImplicationStatus(StrEnum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class CompositionReport:
    """Recognizability radii of (Z, σ), (Y, τ) and (Z, τσ), and the two implications between them."""

    radius_sigma: int | None
    radius_tau: int | None
    radius_composed: int | None
    forward: ImplicationStatus
    backward: ImplicationStatus

    @property
    def consistent(self) -> bool:
        return ImplicationStatus.VIOLATED not in (self.forward, self.backward)

    @property
    def decided(self) -> bool:
        """False when the composed coding was not found recognizable and neither part was shown to fail."""
        return self.radius_composed is not None or None in (self.radius_sigma, self.radius_tau)


def composition_recognizability_check(
    sigma: Morphism,
    tau: Morphism,
    z_language: LanguageProvider,
    d_max: int,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> CompositionReport:
    """(Z, τσ) is recognizable iff (Z, σ) and (Y, τ) are, with Y the union of shifts of σ(Z)."""
    composed = Coding(compose(tau, sigma), z_language)
    radius_sigma = recognizability_radius(Coding(sigma, z_language), d_max, budgets)
    radius_tau = recognizability_radius(Coding(tau, ImageLanguage(z_language, sigma)), d_max, budgets)
    radius_composed = recognizability_radius(composed, d_max, budgets)

    forward = ImplicationStatus.VACUOUS
    if radius_sigma is not None and radius_tau is not None:
        bound = radius_tau + tau.max_length * (radius_sigma + 1)
        found = radius_composed
        if found is None and bound > d_max:
            found = recognizability_radius(composed, bound, budgets)
        forward = ImplicationStatus.HOLDS if found is not None and found <= bound else ImplicationStatus.VIOLATED

    backward = ImplicationStatus.VACUOUS
    if radius_composed is not None:
        parts_found = (
            radius_sigma is not None
            and radius_tau is not None
            and radius_sigma <= radius_composed
            and radius_tau <= radius_composed
        )
        backward = ImplicationStatus.HOLDS if parts_found else ImplicationStatus.VIOLATED

    report = CompositionReport(radius_sigma, radius_tau, radius_composed, forward, backward)
    if not report.decided:
        logger.warning("Composition check undecided within radius %d", d_max)
    return report


def _return_scan(lang: LanguageProvider, clopen: ClopenSet, scan_length: int, budgets: Budgets) -> tuple[set[bytes], int]:
    length = scan_length
    previous: set[bytes] | None = None
    for _ in range(budgets.max_rescans + 1):
        found: set[bytes] = set()
        occurs = False
        for x in lang.words(length):
            positions = clopen.positions(x.symbols)
            occurs = occurs or bool(positions)
            found.update(x.symbols[p:q] for p, q in zip(positions, positions[1:], strict=False))
        if not occurs and previous is None:
            msg = f"The clopen set does not occur in legal words of length {length}"
            raise NotFoundError(msg)
        if found and found == previous:
            return found, length
        logger.debug("Return words at scan length %d: %d", length, len(found))
        previous = found
        length += budgets.scan_step
    msg = f"Return words did not stabilize after {budgets.max_rescans} rescans"
    raise ResourceBudgetError(msg)


def return_words(
    lang: LanguageProvider, clopen: ClopenSet, scan_length: int = DEFAULT_SCAN_LENGTH, budgets: Budgets = DEFAULT_BUDGETS
) -> frozenset[Word]:
    """Words read between consecutive occurrences of the clopen set in legal words."""
    found, _ = _return_scan(lang, clopen, scan_length, budgets)
    return frozenset(Word._wrap(s, lang.alphabet) for s in found)


def _ordered_returns(lang: LanguageProvider, clopen: ClopenSet, found: set[bytes], length: int) -> list[bytes]:
    reference = min(lang.words(length)).symbols
    positions = clopen.positions(reference)
    first_seen: dict[bytes, int] = {}
    for p, q in zip(positions, positions[1:], strict=False):
        first_seen.setdefault(reference[p:q], p)
    return sorted(found, key=lambda r: (first_seen.get(r, len(reference) + 1), r))


def _cut_mismatch(sigma: Morphism, clopen: ClopenSet, symbols: bytes) -> str | None:
    """Describes where the occurrences of the clopen set in σ(v) differ from the cuts of σ, if anywhere."""
    image = sigma.image_bytes(symbols)
    cuts = [0]
    for letter in symbols:
        cuts.append(cuts[-1] + len(sigma.images[letter]))
    expected = [c for c in cuts if clopen.left <= c <= len(image) - clopen.right]
    occurrences = clopen.positions(image)
    if occurrences != expected:
        return f"cuts {expected} vs occurrences {occurrences}"
    return None


def clopen_coding(
    source: DirectiveSequence | SubshiftLanguage,
    clopen: ClopenSet,
    level: int = 0,
    scan_length: int = DEFAULT_SCAN_LENGTH,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Coding:
    """Codes X by its return words to the clopen set.

    The returned coding has reco_radius set after checking it is at most gap + radius,
    and the cuts of σ on every legal Y-word covered by the final return-word scan
    have been matched against the occurrences of the clopen set.

    Raises:
        ResourceBudgetError: if the return words or the syndeticity gap cannot be established.
        VerificationFailedError: if a claimed property of the coding fails on this instance.
    """
    lang = as_language(source, level, budgets)
    found, length = _return_scan(lang, clopen, scan_length, budgets)
    ordered = _ordered_returns(lang, clopen, found, length)
    if len(ordered) > 256:
        msg = f"{len(ordered)} return words do not fit in a byte alphabet"
        raise ResourceBudgetError(msg)
    gap = max(len(r) for r in ordered)
    window = gap + clopen.left + clopen.right
    for x in lang.words(window):
        if not any(p < clopen.left + gap for p in clopen.positions(x.symbols)):
            msg = f"No occurrence in the first {gap} positions of legal word {x}; syndeticity not established"
            raise ResourceBudgetError(msg)

    alphabet = Alphabet.of_size(len(ordered))
    sigma = Morphism(alphabet, lang.alphabet, tuple(Word._wrap(r, lang.alphabet) for r in ordered))
    upper = ReturnWordLanguage(lang, clopen, {r: i for i, r in enumerate(ordered)}, alphabet, gap)
    coding = Coding(sigma, upper)

    longest = max(3, (length - clopen.left - clopen.right) // gap)
    for m in range(1, longest + 1):
        for v in upper.words(m):
            mismatch = _cut_mismatch(sigma, clopen, v.symbols)
            if mismatch:
                raise VerificationFailedError("clopen-cuts", f"{v}: {mismatch}")

    bound = gap + clopen.radius
    radius = recognizability_radius(coding, max(bound, 1), budgets)
    if radius is None:
        raise VerificationFailedError("clopen-radius", f"not recognizable up to radius {bound}")
    logger.info("Clopen coding: %d return words, gap %d, radius %d", len(ordered), gap, radius)
    return replace(coding, reco_radius=radius)


@dataclass(frozen=True)
class SpecialCodingReport:
    """The coding by return words to the right-special cylinder of length n and its checked bounds.

    Attributes:
        coding: the coding, with its recognizability radius.
        special_words: RS_n(X).
        d: max(⌈p(n)/n⌉, p(n+1) - p(n), #A).
        items: property name -> (observed value, bound).
    """

    coding: Coding
    special_words: frozenset[Word]
    n: int
    d: int
    items: Mapping[str, tuple[int, int]]

    @property
    def passed(self) -> bool:
        return all(value <= bound for value, bound in self.items.values())


def special_coding(
    source: DirectiveSequence | SubshiftLanguage,
    n: int,
    level: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> SpecialCodingReport:
    """Codes X by return words to {x : x_[0,n) right-special} and checks the size bounds of that coding."""
    lang = as_language(source, level, budgets)
    special = right_special(lang, n)
    if not special:
        msg = f"No right-special word of length {n}: the subshift is periodic at this scale"
        raise InvalidArgumentError(msg)
    clopen = ClopenSet.starting_with(special)
    coding = clopen_coding(lang, clopen, scan_length=max(DEFAULT_SCAN_LENGTH, 4 * n), budgets=budgets)
    p_n, p_next = len(lang.words(n)), len(lang.words(n + 1))
    size = lang.alphabet.size
    d = max(ceil(p_n / n), p_next - p_n, size)
    if coding.reco_radius is None:
        msg = "Clopen coding returned without a radius"
        raise ConstructionError(msg)
    items = {
        "letters": (coding.sigma.source.size, d**3),
        "image_length": (coding.sigma.max_length, (d + 1) * n),
        "radius": (coding.reco_radius, (d + 2) * n),
        "return_words": (coding.sigma.source.size, size * len(special)),
        "gap": (coding.sigma.max_length, p_n + n),
    }
    report = SpecialCodingReport(coding=coding, special_words=special, n=n, d=d, items=items)
    for name, (value, bound) in items.items():
        if value > bound:
            raise VerificationFailedError(name, f"{value} > {bound} at n = {n}")
    return report
