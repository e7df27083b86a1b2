"""Covers of a word by few short pieces, and complexity bounds from power covers.

cfpz_cover cuts w at ⌊(8k+j)|w|/2^(i+3)⌋ for every level i with 2^i·ℓ < |w| and every
offset j in [0, 8); V is the set of prefixes and suffixes of length >= ℓ of the pieces.
The guarantees are re-checked before returning: per-length counts with a double
polynomial hash, and the two-piece factorization of long factors with a 2D
coverage count over (start, end) pairs.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConstructionError, HypothesisViolatedError, InvalidArgumentError
from .subshift import LanguageProvider
from .words import Word, root

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
OFFSETS = 8
COUNT_FACTOR = 2**5
LONG_FACTOR = 2**6
DIFFERENCE_FACTOR = 256
HASH_MODULI = (2_147_483_647, 2_147_483_629)
HASH_BASE = 911_382_323
MAX_UNCOVERED = 4096


@dataclass(frozen=True)
class CoverSet:
    """V, kept as the spans of the pieces it is read from.

    Attributes:
        w: the covered word.
        ell: the minimal length of a member.
        pieces: (start, stop) spans of w between consecutive cuts.
        level_count: number of levels i used.
        counts: number of distinct members of each length.
    """

    w: Word
    ell: int
    pieces: tuple[tuple[int, int], ...]
    level_count: int
    counts: dict[int, int]

    def members(self) -> Iterator[Word]:
        """Distinct members, shortest first."""
        seen: set[bytes] = set()
        symbols = self.w.symbols
        for size in range(self.ell, len(self.w) + 1):
            for start, stop in self.pieces:
                if stop - start < size:
                    continue
                for candidate in (symbols[start : start + size], symbols[stop - size : stop]):
                    if candidate not in seen:
                        seen.add(candidate)
                        yield Word._wrap(candidate, self.w.alphabet)

    def __contains__(self, word: object) -> bool:
        if not isinstance(word, Word) or len(word) < self.ell:
            return False
        symbols, target = self.w.symbols, word.symbols
        return any(
            stop - start >= len(target)
            and (symbols.startswith(target, start, stop) or symbols.endswith(target, start, stop))
            for start, stop in self.pieces
        )

    @property
    def max_length(self) -> int:
        return max((stop - start for start, stop in self.pieces if stop - start >= self.ell), default=0)

    def __len__(self) -> int:
        return sum(self.counts.values())


def _cut_levels(n: int, ell: int) -> list[list[int]]:
    levels = []
    i = 0
    while 2**i * ell < n:
        scale = 2 ** (i + 3)
        for j in range(OFFSETS):
            cuts = {0, n}
            k = 0
            while (value := (OFFSETS * k + j) * n // scale) < n:
                cuts.add(value)
                k += 1
            levels.append(sorted(cuts))
        i += 1
    return levels


def _prefix_hashes(codes: np.ndarray, modulus: int) -> tuple[np.ndarray, np.ndarray]:
    n = len(codes)
    prefix = np.zeros(n + 1, dtype=np.int64)
    powers = np.ones(n + 1, dtype=np.int64)
    h, p = 0, 1
    for i, c in enumerate(codes.tolist()):
        h = (h * HASH_BASE + c + 1) % modulus
        p = p * HASH_BASE % modulus
        prefix[i + 1] = h
        powers[i + 1] = p
    return prefix, powers


def _distinct_counts(w: Word, starts: np.ndarray, sizes: np.ndarray) -> dict[int, int]:
    codes = np.frombuffer(w.symbols, dtype=np.uint8)
    key = np.zeros(len(starts), dtype=np.int64)
    for modulus in HASH_MODULI:
        prefix, powers = _prefix_hashes(codes, modulus)
        h = (prefix[starts + sizes] - prefix[starts] * powers[sizes] % modulus) % modulus
        key = key * modulus + h if modulus == HASH_MODULI[-1] else h
    rows = np.unique(np.stack([sizes, key], axis=1), axis=0)
    lengths, counts = np.unique(rows[:, 0], return_counts=True)
    return {int(size): int(count) for size, count in zip(lengths, counts, strict=True)}


def _windows(pieces: Iterable[tuple[int, int]], ell: int) -> tuple[np.ndarray, np.ndarray]:
    starts: list[np.ndarray] = []
    sizes: list[np.ndarray] = []
    for start, stop in pieces:
        span = stop - start
        if span < ell:
            continue
        lengths = np.arange(ell, span + 1, dtype=np.int64)
        starts += [np.full(len(lengths), start, dtype=np.int64), stop - lengths]
        sizes += [lengths, lengths]
    if not starts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(starts), np.concatenate(sizes)


def _split_coverage(n: int, ell: int, levels: list[list[int]]) -> np.ndarray:
    """covered[a, b] > 0 iff w[a:b] = (suffix of a piece ending at c)(prefix of a piece starting at c) for some cut c."""
    diff = np.zeros((n + 2, n + 2), dtype=np.int32)
    for cuts in levels:
        for previous, c, following in zip(cuts, cuts[1:], cuts[2:], strict=False):
            a_hi, b_lo = c - ell, c + ell
            if a_hi < previous or b_lo > following:
                continue
            diff[previous, b_lo] += 1
            diff[previous, following + 1] -= 1
            diff[a_hi + 1, b_lo] -= 1
            diff[a_hi + 1, following + 1] += 1
    return np.cumsum(np.cumsum(diff, axis=0, dtype=np.int32), axis=1, dtype=np.int32)[: n + 1, : n + 1]


def cfpz_cover(w: Word, ell: int) -> CoverSet:
    """A set V with ⟨V⟩ >= ℓ, |V| <= |w|, at most 2^5|w|/ℓ members per length, and every factor
    of w of length >= 2^6ℓ in V².

    Raises:
        InvalidArgumentError: unless 1 <= ℓ <= |w|.
        ConstructionError: if a guarantee fails on this input.
    """
    n = len(w)
    if not 1 <= ell <= n:
        msg = f"Need 1 <= ℓ <= |w|, got ℓ={ell}, |w|={n}"
        raise InvalidArgumentError(msg)
    levels = _cut_levels(n, ell)
    pieces = sorted({(a, b) for cuts in levels for a, b in zip(cuts, cuts[1:], strict=False)})
    starts, sizes = _windows(pieces, ell)
    counts = _distinct_counts(w, starts, sizes) if len(starts) else {}
    cover = CoverSet(w=w, ell=ell, pieces=tuple(pieces), level_count=len(levels) // OFFSETS, counts=counts)

    limit = Fraction(COUNT_FACTOR * n, ell)
    crowded = [size for size, count in counts.items() if count > limit]
    if crowded:
        msg = f"{counts[crowded[0]]} members of length {crowded[0]} exceed 2^5|w|/ℓ = {float(limit)}"
        raise ConstructionError(msg)
    if cover.max_length > n or (counts and min(counts) < ell):
        msg = "Cover members fall outside the length range [ℓ, |w|]"
        raise ConstructionError(msg)

    shortest = LONG_FACTOR * ell
    if shortest <= n:
        covered = _split_coverage(n, ell, levels)
        a_index, b_index = np.nonzero(np.triu(covered == 0, k=shortest))
        uncovered = list(zip(a_index.tolist(), b_index.tolist(), strict=True))
        if len(uncovered) > MAX_UNCOVERED:
            msg = f"{len(uncovered)} long factors have no split at a cut"
            raise ConstructionError(msg)
        for a, b in uncovered:
            if not any(w[a:c] in cover and w[c:b] in cover for c in range(a + ell, b - ell + 1)):
                msg = f"Factor w[{a}:{b}] is not a product of two members"
                raise ConstructionError(msg)
    logger.debug("cfpz_cover: %d pieces over %d levels, %d members", len(pieces), cover.level_count, len(cover))
    return cover


@dataclass(frozen=True)
class BoundCheck:
    bound: Fraction
    actual: int

    @property
    def passed(self) -> bool:
        return self.actual <= self.bound


def _block_parse(symbols: bytes, blocks: list[bytes]) -> bool:
    """Whether symbols = (suffix of a block)(blocks)*(prefix of a block)."""
    n = len(symbols)
    reachable = [False] * (n + 1)
    for i in range(n + 1):
        head = symbols[:i]
        reachable[i] = any(block.endswith(head) for block in blocks)
    for i in range(n + 1):
        if not reachable[i]:
            continue
        tail = symbols[i:]
        if any(block.startswith(tail) for block in blocks):
            return True
        for block in blocks:
            if symbols.startswith(block, i):
                reachable[i + len(block)] = True
    return False


def certify_power_cover(lang: LanguageProvider, blocks: Iterable[Word]) -> tuple[Word, ...]:
    """Checks X is covered by concatenations of the blocks at window scale.

    Every legal word of length ⟨W⟩ is a factor of some uv with u, v in W, and every legal
    word of length 2|W| parses into blocks with a partial block on each end.

    Raises:
        InvalidArgumentError: if W is empty or not over the language alphabet.
        HypothesisViolatedError: naming the legal word that breaks the cover.
    """
    words = tuple(sorted(set(blocks), key=lambda b: (len(b), b.symbols)))
    if not words or any(b.alphabet != lang.alphabet or not len(b) for b in words):
        msg = "W must be a nonempty set of nonempty words over the language alphabet"
        raise InvalidArgumentError(msg)
    raw = [b.symbols for b in words]
    pairs = [u + v for u in raw for v in raw]
    shortest = min(len(b) for b in raw)
    for z in sorted(lang.words(shortest)):
        if not any(z.symbols in pair for pair in pairs):
            msg = f"Legal word {z} is not a factor of a two-block concatenation"
            raise HypothesisViolatedError(msg, witness=z)
    longest = max(len(b) for b in raw)
    for z in sorted(lang.words(2 * longest)):
        if not _block_parse(z.symbols, raw):
            msg = f"Legal word {z} does not parse into blocks of W"
            raise HypothesisViolatedError(msg, witness=z)
    return words


def power_cover_px_bound(lang: LanguageProvider, blocks: Iterable[Word]) -> BoundCheck:
    """p(⟨W⟩) <= |W|·#(root W)²."""
    words = certify_power_cover(lang, blocks)
    roots = {root(b) for b in words}
    bound = Fraction(max(len(b) for b in words) * len(roots) ** 2)
    return BoundCheck(bound=bound, actual=len(lang.words(min(len(b) for b in words))))


def first_difference_bound(lang: LanguageProvider, blocks: Iterable[Word], ell: int) -> BoundCheck:
    """p(ℓ+1) - p(ℓ) <= 256·#A·#(root W)²·|W|²/ℓ² for ℓ < ⟨W⟩."""
    words = certify_power_cover(lang, blocks)
    shortest = min(len(b) for b in words)
    if not 1 <= ell < shortest:
        msg = f"ℓ must lie in [1, {shortest}), got {ell}"
        raise InvalidArgumentError(msg)
    roots = {root(b) for b in words}
    longest = max(len(b) for b in words)
    bound = Fraction(DIFFERENCE_FACTOR * lang.alphabet.size * len(roots) ** 2 * longest**2, ell**2)
    actual = len(lang.words(ell + 1)) - len(lang.words(ell))
    return BoundCheck(bound=bound, actual=actual)
