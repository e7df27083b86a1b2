"""Directive sequences and the finite-length languages of the S-adic subshifts they generate.

Levels are numbered as in τ_n: A_{n+1} -> A_n. A sequence is stored as a finite
list of levels followed by a tail rule: either the last `tail_period` levels
repeat forever, or the sequence is finite (diagnostics only).

The language of X^(n) at length ℓ is read off the images τ_[n,m)(ab) of the
two-letter words ab of X^(m), for the first m with ⟨τ_[n,m)⟩ + 1 >= ℓ; the
two-letter words themselves come from recurrent deep images, deepened until two
consecutive depths agree.
"""

import csv
import io
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from typing import Literal, Protocol, runtime_checkable

import networkx as nx

from .config import DEFAULT_BUDGETS, Budgets
from .errors import (
    ConstructionError,
    GrowthStallError,
    InvalidArgumentError,
    NotFoundError,
    ResourceBudgetError,
)
from .factor_index import count_distinct_factors
from .morphisms import Morphism, compose
from .words import Alphabet, Word

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
PAIR_GUARD_LENGTH = 4


class LengthStatus(StrEnum):
    EXACT = "exact"
    LOWER_APPROXIMATION = "lower-approximation"


@dataclass(frozen=True)
class DirectiveSequence:
    """A chain of morphisms τ_0, τ_1, ... with a periodic (or finite) tail.

    Attributes:
        levels: the explicit morphisms; levels[n] maps A_{n+1} into A_n.
        tail_period: the last `tail_period` levels repeat forever; None means the sequence is finite.
        primitive_hint: caller asserts the sequence is primitive (languages are then reported exact).
    """

    levels: tuple[Morphism, ...]
    tail_period: int | None = 1
    primitive_hint: bool = False

    def __post_init__(self) -> None:
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            msg = "A directive sequence needs at least one morphism"
            raise InvalidArgumentError(msg)
        for n in range(len(levels) - 1):
            if levels[n].source != levels[n + 1].target:
                msg = f"Level {n + 1} maps into {levels[n + 1].target} but level {n} reads {levels[n].source}"
                raise InvalidArgumentError(msg)
        if self.tail_period is not None:
            if not 1 <= self.tail_period <= len(levels):
                msg = f"Tail period must be in [1, {len(levels)}], got {self.tail_period}"
                raise InvalidArgumentError(msg)
            first = levels[len(levels) - self.tail_period]
            if first.target != levels[-1].source:
                msg = (
                    f"Repeated block is not endomorphic: it maps {levels[-1].source} "
                    f"into {first.target}"
                )
                raise InvalidArgumentError(msg)

    @property
    def is_finite(self) -> bool:
        return self.tail_period is None

    @property
    def tail_start(self) -> int:
        if self.tail_period is None:
            return len(self.levels)
        return len(self.levels) - self.tail_period

    @property
    def tail_phases(self) -> range:
        return range(self.tail_start, len(self.levels))

    def canonical_level(self, n: int) -> int:
        """The explicit level whose suffix sequence equals the one starting at n."""
        if n < 0:
            msg = f"Levels are non-negative, got {n}"
            raise InvalidArgumentError(msg)
        if self.tail_period is None:
            if n > len(self.levels):
                msg = f"Level {n} is beyond the finite sequence of {len(self.levels)} morphisms"
                raise InvalidArgumentError(msg)
            return n
        if n < self.tail_start:
            return n
        return self.tail_start + (n - self.tail_start) % self.tail_period

    def morphism(self, n: int) -> Morphism:
        if self.tail_period is None and n >= len(self.levels):
            msg = f"Level {n} is beyond the finite sequence of {len(self.levels)} morphisms"
            raise InvalidArgumentError(msg)
        return self.levels[self.canonical_level(n)]

    def alphabet(self, n: int) -> Alphabet:
        if self.tail_period is None and n == len(self.levels):
            return self.levels[-1].source
        return self.morphism(n).target

    def compose_range(self, n: int, m: int) -> Morphism:
        """τ_[n,m) = τ_n ∘ ... ∘ τ_{m-1}; the identity of A_n when m = n."""
        if m < n:
            msg = f"Empty range [{n}, {m})"
            raise InvalidArgumentError(msg)
        block = Morphism.identity(self.alphabet(n))
        for k in range(n, m):
            block = compose(block, self.morphism(k))
        return block


@dataclass(frozen=True)
class RecurrenceAnalysis:
    """Letters that occur in images of letters from arbitrarily deep levels.

    Attributes:
        recurrent: canonical level -> recurrent letters of A_level.
        certified: every letter of every tail phase is recurrent.
    """

    recurrent: Mapping[int, frozenset[int]]
    certified: bool

    def letters(self, dirseq: DirectiveSequence, n: int) -> frozenset[int]:
        return self.recurrent[dirseq.canonical_level(n)]


def recurrence_analysis(dirseq: DirectiveSequence) -> RecurrenceAnalysis:
    """Recurrent letters via reachability from cycles of the letter-occurrence graph on the tail."""
    if dirseq.tail_period is None:
        levels = range(len(dirseq.levels) + 1)
        return RecurrenceAnalysis({n: frozenset(dirseq.alphabet(n)) for n in levels}, certified=False)
    graph = nx.DiGraph()
    for q in dirseq.tail_phases:
        graph.add_nodes_from((q, a) for a in dirseq.alphabet(q))
        upper = dirseq.canonical_level(q + 1)
        tau = dirseq.morphism(q)
        for b, image in zip(tau.source.symbols, tau.images, strict=True):
            graph.add_edges_from(((upper, b), (q, a)) for a in image.letters())
    cyclic: set[tuple[int, int]] = set()
    for component in nx.strongly_connected_components(graph):
        node = next(iter(component))
        if len(component) > 1 or graph.has_edge(node, node):
            cyclic |= component
    reached = set(cyclic)
    for node in cyclic:
        reached |= nx.descendants(graph, node)
    recurrent: dict[int, frozenset[int]] = {
        q: frozenset(a for level, a in reached if level == q) for q in dirseq.tail_phases
    }
    for n in range(dirseq.tail_start - 1, -1, -1):
        tau = dirseq.morphism(n)
        above = recurrent[dirseq.canonical_level(n + 1)]
        recurrent[n] = frozenset().union(*(tau.image(b).letters() for b in above))
    certified = len(reached) == graph.number_of_nodes()
    logger.debug("Recurrence analysis: certified=%s, recurrent=%s", certified, dict(recurrent))
    return RecurrenceAnalysis(recurrent, certified)


@runtime_checkable
class LanguageProvider(Protocol):
    """Anything that can list the legal words of a subshift by length."""

    @property
    def alphabet(self) -> Alphabet: ...

    def words(self, length: int) -> frozenset[Word]: ...

    def status(self, length: int) -> LengthStatus: ...


@dataclass(frozen=True)
class ComplexityTable:
    """p(1), ..., p(max_length) with derived first differences."""

    counts: tuple[int, ...]
    status: LengthStatus = LengthStatus.EXACT

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 1 for c in self.counts):
            msg = f"Complexity values must be at least 1, got {self.counts}"
            raise InvalidArgumentError(msg)

    @property
    def max_length(self) -> int:
        return len(self.counts)

    def p(self, n: int) -> int:
        if not 1 <= n <= self.max_length:
            msg = f"Length {n} is outside the table range [1, {self.max_length}]"
            raise InvalidArgumentError(msg)
        return self.counts[n - 1]

    def delta(self, n: int) -> int | None:
        """p(n+1) - p(n), or None for the last row."""
        if n == self.max_length:
            return None
        return self.p(n + 1) - self.p(n)

    def deltas(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.counts, self.counts[1:], strict=False))

    def rows(self) -> list[tuple[int, int, int | None]]:
        return [(n, self.p(n), self.delta(n)) for n in range(1, self.max_length + 1)]

    def to_csv(self) -> str:
        """Header n,p,delta; the last row has an empty delta."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "p", "delta"])
        writer.writerows((n, p, "" if delta is None else delta) for n, p, delta in self.rows())
        return buffer.getvalue()


@dataclass(frozen=True)
class LanguageTable:
    """Legal-word sets of X^(level) for a fixed set of lengths."""

    dirseq: DirectiveSequence
    level: int
    entries: Mapping[int, frozenset[Word]]
    status: Mapping[int, LengthStatus]
    stabilization_depth: int

    def words(self, length: int) -> frozenset[Word]:
        if length not in self.entries:
            msg = f"Length {length} was not computed (available: {sorted(self.entries)})"
            raise InvalidArgumentError(msg)
        return self.entries[length]


class SubshiftLanguage:
    """Language of X^(level) for a directive sequence, computed lazily and cached by length.

    Construction is single-writer; the word sets handed out are immutable.
    """

    def __init__(self, dirseq: DirectiveSequence, level: int = 0, budgets: Budgets = DEFAULT_BUDGETS) -> None:
        dirseq.canonical_level(level)
        self.dirseq = dirseq
        self.level = level
        self.budgets = budgets
        self.analysis = recurrence_analysis(dirseq)
        self._words: dict[int, frozenset[Word]] = {}
        self._counts: list[int] = []
        self._pairs: dict[int, tuple[frozenset[bytes], int]] = {}
        self._depths: dict[int, int] = {}

    @property
    def alphabet(self) -> Alphabet:
        return self.dirseq.alphabet(self.level)

    @property
    def exact(self) -> bool:
        return not self.dirseq.is_finite and (self.dirseq.primitive_hint or self.analysis.certified)

    def status(self, length: int) -> LengthStatus:
        return LengthStatus.EXACT if self.exact else LengthStatus.LOWER_APPROXIMATION

    def depth(self, length: int) -> int:
        """Depth m of the images τ_[level,m) that produced the words of this length."""
        if length not in self._depths:
            self._pieces(length)
        return self._depths[length]

    def _check_length(self, length: int) -> None:
        if length < 1:
            msg = f"Word length must be at least 1, got {length}"
            raise InvalidArgumentError(msg)
        if length > self.budgets.max_language_length:
            msg = f"Length {length} exceeds the language budget {self.budgets.max_language_length}"
            raise ResourceBudgetError(msg)

    def _check_size(self, block: Morphism, depth: int) -> None:
        total = sum(len(image) for image in block.images)
        if total > self.budgets.max_symbols:
            msg = f"Expanding to depth {depth} needs {total} symbols, over the budget {self.budgets.max_symbols}"
            raise ResourceBudgetError(msg)

    def _shortest(self, block: Morphism, n: int) -> int:
        letters = self.analysis.letters(self.dirseq, n)
        if not letters:
            msg = f"No recurrent letter at level {n}"
            raise ConstructionError(msg)
        return min(len(block.image(a)) for a in letters)

    def _two_factors(self, m: int) -> frozenset[bytes]:
        """Two-letter words of X^(m), deepened until two consecutive depths agree."""
        key = self.dirseq.canonical_level(m)
        if key in self._pairs:
            return self._pairs[key][0]
        block = Morphism.identity(self.dirseq.alphabet(m))
        previous: frozenset[bytes] | None = None
        previous_shortest = 0
        deep = m
        while True:
            block = compose(block, self.dirseq.morphism(deep))
            deep += 1
            self._check_size(block, deep)
            letters = self.analysis.letters(self.dirseq, deep)
            found = frozenset(
                image[i : i + 2] for a in letters for image in (block.image(a).symbols,) for i in range(len(image) - 1)
            )
            shortest = self._shortest(block, deep)
            if found == previous and previous_shortest >= PAIR_GUARD_LENGTH:
                logger.debug("Two-letter words of level %d stabilized at depth %d", m, deep - 1)
                self._pairs[key] = (found, deep - 1)
                return found
            previous, previous_shortest = found, shortest
            if deep - m > self.budgets.max_depth:
                msg = (
                    f"Images of level {m} did not stabilize within {self.budgets.max_depth} levels "
                    f"(shortest recurrent image {shortest})"
                )
                raise GrowthStallError(msg, depth=deep, min_length=shortest)

    def _pieces(self, length: int) -> list[bytes]:
        """Words whose factors of length <= `length` are exactly the legal ones."""
        self._check_length(length)
        dirseq = self.dirseq
        if dirseq.tail_period is None:
            block = dirseq.compose_range(self.level, len(dirseq.levels))
            self._depths[length] = len(dirseq.levels)
            return [image.symbols for image in block.images]
        block = Morphism.identity(self.alphabet)
        m = self.level
        while self._shortest(block, m) + 1 < length:
            if m - self.level >= self.budgets.max_depth:
                shortest = self._shortest(block, m)
                msg = (
                    f"Shortest recurrent image stalled at {shortest} after {self.budgets.max_depth} levels; "
                    "the directive sequence does not look everywhere growing"
                )
                raise GrowthStallError(msg, depth=m, min_length=shortest)
            block = compose(block, dirseq.morphism(m))
            m += 1
            self._check_size(block, m)
        self._depths[length] = m
        return [block.image_bytes(pair) for pair in sorted(self._two_factors(m))]

    def words(self, length: int) -> frozenset[Word]:
        """Legal words of X^(level) of the given length."""
        if length in self._words:
            return self._words[length]
        pieces = self._pieces(length)
        found = {piece[i : i + length] for piece in pieces for i in range(len(piece) - length + 1)}
        words = frozenset(Word._wrap(symbols, self.alphabet) for symbols in found)
        if not self.exact:
            logger.warning("Language of level %d at length %d is a lower approximation", self.level, length)
        self._words[length] = words
        return words

    def complexity(self, max_length: int) -> ComplexityTable:
        """p(1..max_length) from a single suffix-array pass over the expanded images."""
        if max_length > len(self._counts):
            self._counts = count_distinct_factors(self._pieces(max_length), max_length)
        status = LengthStatus.EXACT if self.exact else LengthStatus.LOWER_APPROXIMATION
        return ComplexityTable(tuple(self._counts[:max_length]), status)

    def count(self, length: int) -> int:
        if length in self._words:
            return len(self._words[length])
        return self.complexity(length).p(length)

    def table(self, lengths: Iterable[int]) -> LanguageTable:
        wanted = sorted(set(lengths))
        entries = {length: self.words(length) for length in wanted}
        return LanguageTable(
            dirseq=self.dirseq,
            level=self.level,
            entries=entries,
            status={length: self.status(length) for length in wanted},
            stabilization_depth=max((self._depths[length] for length in wanted), default=self.level),
        )


def as_language(
    source: DirectiveSequence | SubshiftLanguage, level: int = 0, budgets: Budgets = DEFAULT_BUDGETS
) -> SubshiftLanguage:
    if isinstance(source, SubshiftLanguage):
        return source
    return SubshiftLanguage(source, level, budgets)


def language(
    dirseq: DirectiveSequence, level: int, length: int, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[frozenset[Word], LengthStatus]:
    lang = SubshiftLanguage(dirseq, level, budgets)
    return lang.words(length), lang.status(length)


def language_table(
    dirseq: DirectiveSequence, level: int, lengths: Iterable[int], budgets: Budgets = DEFAULT_BUDGETS
) -> LanguageTable:
    return SubshiftLanguage(dirseq, level, budgets).table(lengths)


def complexity(
    dirseq: DirectiveSequence, level: int, max_length: int, budgets: Budgets = DEFAULT_BUDGETS
) -> ComplexityTable:
    if max_length < 1:
        msg = f"max_length must be at least 1, got {max_length}"
        raise InvalidArgumentError(msg)
    return SubshiftLanguage(dirseq, level, budgets).complexity(max_length)


def _special(lang: SubshiftLanguage, n: int, side: Literal["right", "left"]) -> frozenset[Word]:
    if n < 1:
        msg = f"Length must be at least 1, got {n}"
        raise InvalidArgumentError(msg)
    extensions: dict[bytes, set[int]] = {}
    for word in lang.words(n + 1):
        symbols = word.symbols
        if side == "right":
            extensions.setdefault(symbols[:-1], set()).add(symbols[-1])
        else:
            extensions.setdefault(symbols[1:], set()).add(symbols[0])
    special = frozenset(Word._wrap(core, lang.alphabet) for core, letters in extensions.items() if len(letters) >= 2)
    if lang.exact:
        growth = len(lang.words(n + 1)) - len(lang.words(n))
        if not (growth <= lang.alphabet.size * len(special) and len(special) <= growth):
            msg = f"{side}-special count {len(special)} at length {n} violates the bounds for growth {growth}"
            raise ConstructionError(msg)
    return special


def right_special(
    source: DirectiveSequence | SubshiftLanguage, n: int, level: int = 0, budgets: Budgets = DEFAULT_BUDGETS
) -> frozenset[Word]:
    """Legal words w of length n with two distinct letters a, b such that wa and wb are legal."""
    return _special(as_language(source, level, budgets), n, "right")


def left_special(
    source: DirectiveSequence | SubshiftLanguage, n: int, level: int = 0, budgets: Budgets = DEFAULT_BUDGETS
) -> frozenset[Word]:
    return _special(as_language(source, level, budgets), n, "left")


def power_set(
    source: DirectiveSequence | SubshiftLanguage,
    v: Word,
    k_max: int,
    level: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> tuple[Word, ...]:
    """Powers v^k, k <= k_max, that occur as u v^k w with |u| = |w| = |v| and u, w != v."""
    if not len(v) or k_max < 1:
        msg = "power_set needs a nonempty base and k_max >= 1"
        raise InvalidArgumentError(msg)
    lang = as_language(source, level, budgets)
    size = len(v)
    if (k_max + 2) * size > lang.budgets.max_language_length:
        msg = f"Powers up to {k_max} of a length-{size} base exceed the language budget"
        raise ResourceBudgetError(msg)
    base = v.symbols
    powers = []
    for k in range(1, k_max + 1):
        middle = base * k
        for word in lang.words((k + 2) * size):
            z = word.symbols
            if z[size : (k + 1) * size] == middle and z[:size] != base and z[(k + 1) * size :] != base:
                powers.append(v * k)
                break
    return tuple(powers)


def pcom_estimate(
    source: DirectiveSequence | SubshiftLanguage,
    max_base_length: int,
    k_max: int,
    level: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Lower bound on the power complexity: max #Pow over legal bases of length <= max_base_length."""
    lang = as_language(source, level, budgets)
    best = 0
    for size in range(1, max_base_length + 1):
        for base in sorted(lang.words(size)):
            best = max(best, len(power_set(lang, base, k_max)))
    return best


def find_low_growth_length(table: ComplexityTable, n: int, d: int) -> int:
    """Smallest m in [n, 2n) with p(m+1) - p(m) <= 2d.

    Raises:
        InvalidArgumentError: if the table stops before 2n or p(2n) - p(n) > 2dn.
    """
    if n < 1 or d < 1:
        msg = f"n and d must be positive, got n={n}, d={d}"
        raise InvalidArgumentError(msg)
    if table.max_length < 2 * n:
        msg = f"Table covers lengths up to {table.max_length}, need {2 * n}"
        raise InvalidArgumentError(msg)
    if table.p(2 * n) - table.p(n) > 2 * d * n:
        msg = f"p(2n) - p(n) = {table.p(2 * n) - table.p(n)} exceeds 2dn = {2 * d * n}"
        raise InvalidArgumentError(msg)
    for m in range(n, 2 * n):
        if table.p(m + 1) - table.p(m) <= 2 * d:
            return m
    msg = f"No low-growth length in [{n}, {2 * n}) although the average growth is at most 2d"
    raise ConstructionError(msg)


@dataclass(frozen=True)
class SparseGrowthCertificate:
    m: int
    k: int
    p_k: int
    p_m: int
    delta: int


def find_sparse_low_growth(table: ComplexityTable, d: int, n_min: int) -> SparseGrowthCertificate:
    """m >= n_min with p(m) <= 3dm and p(m+1) - p(m) <= 2d, found below a k with p(k) <= dk."""
    if n_min < 1 or d < 1:
        msg = f"n_min and d must be positive, got n_min={n_min}, d={d}"
        raise InvalidArgumentError(msg)
    for k in range(2 * n_min, table.max_length + 1):
        if table.p(k) > d * k:
            continue
        for m in range(max(k // 2, n_min), min(k, table.max_length - 1) + 1):
            delta = table.p(m + 1) - table.p(m)
            if delta <= 2 * d and table.p(m) <= 3 * d * m:
                return SparseGrowthCertificate(m=m, k=k, p_k=table.p(k), p_m=table.p(m), delta=delta)
    msg = f"No k in [{2 * n_min}, {table.max_length}] with p(k) <= {d}k gives a low-growth length"
    raise NotFoundError(msg)


@dataclass(frozen=True)
class ContractionMode:
    """How `contract` groups consecutive levels.

    growth(d): cut as soon as the block's shortest image reaches d.
    fixed(b): blocks of exactly b levels.
    """

    kind: Literal["growth", "fixed"]
    value: int

    def __post_init__(self) -> None:
        if self.value < 1:
            msg = f"Contraction parameter must be positive, got {self.value}"
            raise InvalidArgumentError(msg)

    @classmethod
    def growth(cls, min_length: int) -> "ContractionMode":
        return cls("growth", min_length)

    @classmethod
    def fixed(cls, block: int) -> "ContractionMode":
        return cls("fixed", block)


def _next_block(
    dirseq: DirectiveSequence, start: int, mode: ContractionMode, budgets: Budgets
) -> tuple[int, Morphism]:
    block = dirseq.morphism(start)
    end = start + 1
    while True:
        if mode.kind == "fixed" and end - start >= mode.value:
            return end, block
        if mode.kind == "growth" and block.min_length >= mode.value:
            return end, block
        if dirseq.is_finite and end >= len(dirseq.levels):
            return end, block
        if end - start >= budgets.max_depth:
            msg = f"Block starting at level {start} reached depth {budgets.max_depth} with shortest image {block.min_length}"
            raise GrowthStallError(msg, depth=end, min_length=block.min_length)
        block = compose(block, dirseq.morphism(end))
        end += 1


def contraction_boundaries(
    dirseq: DirectiveSequence, mode: ContractionMode, count: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list[int]:
    """The first `count` + 1 cut levels n_0 = 0 < n_1 < ... of the contraction."""
    cuts = [0]
    while len(cuts) <= count:
        if dirseq.is_finite and cuts[-1] >= len(dirseq.levels):
            break
        end, _ = _next_block(dirseq, cuts[-1], mode, budgets)
        cuts.append(end)
    return cuts


def contract(
    dirseq: DirectiveSequence, mode: ContractionMode, budgets: Budgets = DEFAULT_BUDGETS
) -> DirectiveSequence:
    """Telescopes consecutive levels into blocks; the level-0 subshift is unchanged."""
    blocks: list[Morphism] = []
    seen: dict[int, int] = {}
    start = 0
    while True:
        if dirseq.is_finite and start >= len(dirseq.levels):
            return DirectiveSequence(tuple(blocks), None, dirseq.primitive_hint)
        if not dirseq.is_finite and start >= dirseq.tail_start:
            phase = dirseq.canonical_level(start)
            if phase in seen:
                period = len(blocks) - seen[phase]
                logger.debug("Contraction: %d blocks, tail period %d", len(blocks), period)
                return DirectiveSequence(tuple(blocks), period, dirseq.primitive_hint)
            seen[phase] = len(blocks)
        start, block = _next_block(dirseq, start, mode, budgets)
        blocks.append(block)


@dataclass(frozen=True)
class GrowthLevel:
    depth: int
    min_length: int
    max_length: int
    positive: bool


@dataclass(frozen=True)
class GrowthReport:
    """Lengths of τ_[0,n) for n = 1..depth and tail-level growth facts.

    Attributes:
        levels: one row per depth.
        primitive: every tail phase has a positive block τ_[q,m) within the depth budget.
        everywhere_growing: ⟨τ_[0,n)⟩ diverges (decided exactly from the repeated block).
    """

    levels: tuple[GrowthLevel, ...]
    primitive: bool
    everywhere_growing: bool


def _positive_block_exists(dirseq: DirectiveSequence, start: int, budgets: Budgets) -> bool:
    target = frozenset(dirseq.alphabet(start))
    letters = {a: frozenset({a}) for a in dirseq.alphabet(start)}
    for n in range(start, start + budgets.max_depth):
        tau = dirseq.morphism(n)
        letters = {
            b: frozenset().union(*(letters[c] for c in image.letters()))
            for b, image in zip(tau.source.symbols, tau.images, strict=True)
        }
        if all(found == target for found in letters.values()):
            return True
    return False


def _unbounded_letters(block: Morphism) -> frozenset[int]:
    """Letters a with |block^k(a)| unbounded.

    |block^k(a)| counts paths of length k from a in the occurrence multigraph, so it
    stays bounded exactly when every cyclic component reachable from a is a single
    closed cycle with unit multiplicities.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(block.source.symbols)
    for a, image in zip(block.source.symbols, block.images, strict=True):
        for c in image.letters():
            graph.add_edge(a, c, weight=image.symbols.count(c))
    growing: set[int] = set()
    for component in nx.strongly_connected_components(graph):
        node = next(iter(component))
        if len(component) == 1 and not graph.has_edge(node, node):
            continue
        inside = sum(w for u, v, w in graph.edges(component, data="weight") if v in component)
        leaves = any(v not in component for _, v in graph.edges(component))
        if inside > len(component) or leaves:
            growing |= component
    return frozenset(a for a in graph if growing & (nx.descendants(graph, a) | {a}))


def _everywhere_growing(dirseq: DirectiveSequence) -> bool:
    if dirseq.tail_period is None:
        return False
    start = dirseq.tail_start
    unbounded = _unbounded_letters(dirseq.compose_range(start, start + dirseq.tail_period))
    for phase in dirseq.tail_phases:
        head = dirseq.compose_range(start, phase)
        if any(not image.letters() & unbounded for image in head.images):
            return False
    return True


def growth_report(dirseq: DirectiveSequence, depth: int, budgets: Budgets = DEFAULT_BUDGETS) -> GrowthReport:
    if depth < 1:
        msg = f"depth must be at least 1, got {depth}"
        raise InvalidArgumentError(msg)
    if dirseq.is_finite:
        depth = min(depth, len(dirseq.levels))
    everything = frozenset(dirseq.alphabet(0))
    lengths = {a: 1 for a in dirseq.alphabet(0)}
    letters = {a: frozenset({a}) for a in dirseq.alphabet(0)}
    rows = []
    for n in range(1, depth + 1):
        tau = dirseq.morphism(n - 1)
        lengths = {b: sum(lengths[c] for c in image) for b, image in zip(tau.source.symbols, tau.images, strict=True)}
        letters = {
            b: frozenset().union(*(letters[c] for c in image.letters()))
            for b, image in zip(tau.source.symbols, tau.images, strict=True)
        }
        rows.append(
            GrowthLevel(
                depth=n,
                min_length=min(lengths.values()),
                max_length=max(lengths.values()),
                positive=all(found == everything for found in letters.values()),
            )
        )
    primitive = not dirseq.is_finite and all(
        _positive_block_exists(dirseq, q, budgets) for q in dirseq.tail_phases
    )
    return GrowthReport(levels=tuple(rows), primitive=primitive, everywhere_growing=_everywhere_growing(dirseq))
