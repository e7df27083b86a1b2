"""Finite words over small alphabets and the periodicity primitives built on them.

Words store their symbols as `bytes`, so symbol ids are limited to 0..255 and
every scan below runs on the builtin bytes search. Lexicographic order is the
numeric order of symbol ids.
"""

import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from math import ceil

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from .config import DEFAULT_BUDGETS
from .errors import ConstructionError, HypothesisViolatedError, InvalidArgumentError, ResourceBudgetError

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
MAX_SYMBOL_ID = 255


@dataclass(frozen=True, slots=True)
class Alphabet:
    """An ordered set of symbol ids with optional display glyphs.

    Equality and hashing only look at the ids; glyphs are display metadata.
    """

    symbols: tuple[int, ...]
    glyphs: tuple[str, ...] | None = field(default=None, compare=False)
    _members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            msg = "Alphabet must contain at least one symbol"
            raise InvalidArgumentError(msg)
        if len(set(symbols)) != len(symbols):
            msg = f"Alphabet has duplicate symbols: {symbols}"
            raise InvalidArgumentError(msg)
        if any(not isinstance(s, int) or s < 0 or s > MAX_SYMBOL_ID for s in symbols):
            msg = f"Symbol ids must be integers in [0, {MAX_SYMBOL_ID}], got {symbols}"
            raise InvalidArgumentError(msg)
        if self.glyphs is not None:
            glyphs = tuple(self.glyphs)
            if len(glyphs) != len(symbols) or len(set(glyphs)) != len(glyphs) or not all(glyphs):
                msg = f"Glyphs {glyphs} must be distinct, nonempty and match {len(symbols)} symbols"
                raise InvalidArgumentError(msg)
            object.__setattr__(self, "glyphs", glyphs)
        object.__setattr__(self, "_members", frozenset(symbols))

    @classmethod
    def of_size(cls, size: int) -> "Alphabet":
        """Alphabet {0, ..., size-1} rendered with its digits."""
        return cls(tuple(range(size)))

    @classmethod
    def binary(cls) -> "Alphabet":
        return cls.of_size(2)

    @classmethod
    def from_glyphs(cls, glyphs: Iterable[str]) -> "Alphabet":
        """Alphabet whose i-th glyph denotes symbol id i, e.g. from_glyphs("ab")."""
        glyph_tuple = tuple(glyphs)
        return cls(tuple(range(len(glyph_tuple))), glyph_tuple)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._members

    @property
    def size(self) -> int:
        return len(self.symbols)

    def glyph(self, symbol: int) -> str:
        if self.glyphs is None:
            return str(symbol)
        return self.glyphs[self.symbols.index(symbol)]

    def symbol_for(self, token: str) -> int:
        """Resolves a glyph (or a decimal id when the alphabet has no glyphs)."""
        if self.glyphs is not None and token in self.glyphs:
            return self.symbols[self.glyphs.index(token)]
        if token.isdigit() and int(token) in self._members:
            return int(token)
        msg = f"Unknown symbol {token!r} for alphabet {self}"
        raise InvalidArgumentError(msg)

    def render(self, symbols: bytes) -> str:
        if self.glyphs is not None and all(len(g) == 1 for g in self.glyphs):
            return "".join(self.glyph(s) for s in symbols)
        if self.glyphs is None and max(self.symbols) < 10:
            return "".join(str(s) for s in symbols)
        return " ".join(self.glyph(s) for s in symbols)

    def __str__(self) -> str:
        return "{" + ",".join(self.glyph(s) for s in self.symbols) + "}"


@dataclass(frozen=True, slots=True)
class Word:
    """A finite sequence of symbols over a declared alphabet."""

    symbols: bytes
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, bytes):
            object.__setattr__(self, "symbols", bytes(self.symbols))
        outside = set(self.symbols) - self.alphabet._members
        if outside:
            msg = f"Symbols {sorted(outside)} are not in alphabet {self.alphabet}"
            raise InvalidArgumentError(msg)

    @classmethod
    def _wrap(cls, symbols: bytes, alphabet: Alphabet) -> "Word":
        # Skips validation; symbols are already known to be over the alphabet.
        word = object.__new__(cls)
        object.__setattr__(word, "symbols", symbols)
        object.__setattr__(word, "alphabet", alphabet)
        return word

    @classmethod
    def of(cls, symbols: Iterable[int], alphabet: Alphabet) -> "Word":
        return cls(bytes(symbols), alphabet)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Word":
        return cls._wrap(b"", alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        """Parses a word written with single-character glyphs or whitespace-separated tokens."""
        text = text.strip()
        if not text:
            return cls.empty(alphabet)
        tokens = text.split() if any(ch.isspace() for ch in text) else list(text)
        return cls(bytes(alphabet.symbol_for(token) for token in tokens), alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: int | slice) -> "int | Word":
        if isinstance(index, slice):
            return Word._wrap(self.symbols[index], self.alphabet)
        return self.symbols[index]

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            msg = f"Cannot concatenate words over {self.alphabet} and {other.alphabet}"
            raise InvalidArgumentError(msg)
        return Word._wrap(self.symbols + other.symbols, self.alphabet)

    def __mul__(self, times: int) -> "Word":
        return Word._wrap(self.symbols * times, self.alphabet)

    __rmul__ = __mul__

    def __lt__(self, other: "Word") -> bool:
        return self.symbols < other.symbols

    def __contains__(self, other: object) -> bool:
        return isinstance(other, Word) and other.symbols in self.symbols

    def __str__(self) -> str:
        return self.alphabet.render(self.symbols)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def find(self, other: "Word", start: int = 0) -> int:
        return self.symbols.find(other.symbols, start)

    def occurrences(self, other: "Word") -> list[int]:
        """All (possibly overlapping) start positions of other in self."""
        positions = []
        at = self.symbols.find(other.symbols)
        while at != -1:
            positions.append(at)
            at = self.symbols.find(other.symbols, at + 1)
        return positions

    def startswith(self, other: "Word") -> bool:
        return self.symbols.startswith(other.symbols)

    def endswith(self, other: "Word") -> bool:
        return self.symbols.endswith(other.symbols)

    def letters(self) -> frozenset[int]:
        return frozenset(self.symbols)

    def factors(self, length: int) -> set["Word"]:
        return {Word._wrap(self.symbols[i : i + length], self.alphabet) for i in range(len(self) - length + 1)}


@dataclass(frozen=True, slots=True)
class PowerWindow:
    """The factor t^ℤ_[lo, hi) of the bi-infinite power of a nonempty word t."""

    base: Word
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not len(self.base):
            msg = "PowerWindow base must be nonempty"
            raise InvalidArgumentError(msg)
        if self.lo > self.hi:
            msg = f"PowerWindow bounds must satisfy lo <= hi, got [{self.lo}, {self.hi})"
            raise InvalidArgumentError(msg)

    def __len__(self) -> int:
        return self.hi - self.lo

    def materialize(self, limit: int = DEFAULT_BUDGETS.window_limit) -> Word:
        length = self.hi - self.lo
        if length > limit:
            msg = f"PowerWindow of length {length} exceeds the window limit {limit}"
            raise ResourceBudgetError(msg)
        return Word._wrap(_power_bytes(self.base.symbols, self.lo, length), self.base.alphabet)


@dataclass(frozen=True, slots=True)
class LocalPeriodCertificate:
    """Result of transferring local periods to a global one.

    Attributes:
        assignment: each factor of length 2|V| mapped to the word of V whose power contains it.
        bound: the maximal length |V|.
        period: per(u), at most bound.
    """

    assignment: Mapping[Word, Word]
    bound: int
    period: int


def _power_bytes(base: bytes, start: int, length: int) -> bytes:
    if length <= 0:
        return b""
    offset = start % len(base)
    rotated = base[offset:] + base[:offset]
    return (rotated * (length // len(rotated) + 1))[:length]


def _require_nonempty(*words: Word) -> None:
    for w in words:
        if not len(w):
            msg = "Operation requires a nonempty word"
            raise InvalidArgumentError(msg)


def prefix_function(symbols: bytes | Sequence[int]) -> list[int]:
    """Border lengths of every prefix (the Knuth-Morris-Pratt failure table)."""
    border = [0] * len(symbols)
    k = 0
    for i in range(1, len(symbols)):
        while k > 0 and symbols[i] != symbols[k]:
            k = border[k - 1]
        if symbols[i] == symbols[k]:
            k += 1
        border[i] = k
    return border


def root(w: Word) -> Word:
    """Shortest prefix u of w with w = u^k."""
    _require_nonempty(w)
    return w[: (w.symbols + w.symbols).find(w.symbols, 1)]


def is_primitive(w: Word) -> bool:
    _require_nonempty(w)
    return (w.symbols + w.symbols).find(w.symbols, 1) == len(w)


def period(w: Word) -> int:
    """Least p such that w is a factor of a power of a length-p word."""
    _require_nonempty(w)
    return len(w) - prefix_function(w.symbols)[-1]


def occurs_in_power(w: Word, t: Word) -> bool:
    """True iff w is a factor of t^ℤ (equivalently of t^∞)."""
    return w.symbols in t.symbols * (ceil(len(w) / len(t)) + 1)


def is_periodic_by(w: Word, u: Word) -> bool:
    """True iff w is a factor of u^(⌈|w|/|u|⌉+1)."""
    _require_nonempty(w, u)
    return occurs_in_power(w, u)


def are_conjugate(u: Word, v: Word) -> bool:
    return len(u) == len(v) and v.symbols in u.symbols + u.symbols


def canonical_rotation(w: Word) -> Word:
    """Lexicographically least rotation (the Lyndon representative when w is primitive)."""
    if not len(w):
        return w
    doubled = w.symbols + w.symbols
    n = len(w)
    return Word._wrap(min(doubled[i : i + n] for i in range(n)), w.alphabet)


def lyndon_factorization(w: Word) -> list[Word]:
    """Duval's factorization of w into a non-increasing sequence of Lyndon words."""
    s = w.symbols
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return factors


def fine_wilf(u: Word, v: Word, w: Word) -> Word | None:
    """Common root of u and v forced by a long enough shared prefix of u^∞ and v^∞.

    Raises:
        InvalidArgumentError: if w is not a prefix of both u^∞ and v^∞.
        ConstructionError: if the length hypothesis holds but the roots differ.
    """
    _require_nonempty(u, v)
    if w.symbols != _power_bytes(u.symbols, 0, len(w)) or w.symbols != _power_bytes(v.symbols, 0, len(w)):
        msg = f"{w} is not a common prefix of {u}^∞ and {v}^∞"
        raise InvalidArgumentError(msg)
    root_u, root_v = root(u), root(v)
    if len(w) >= len(u) + len(v) - 1:
        if root_u != root_v:
            msg = f"Roots {root_u} and {root_v} differ although |w| >= |u| + |v| - 1"
            raise ConstructionError(msg)
        return root_u
    return root_u if root_u == root_v else None


def shift_fixes_power(t: Word, i: int) -> bool:
    """True iff S^i t^ℤ = t^ℤ."""
    _require_nonempty(t)
    return i % len(root(t)) == 0


def power_window(t: Word, lo: int, hi: int, limit: int = DEFAULT_BUDGETS.window_limit) -> Word:
    return PowerWindow(t, lo, hi).materialize(limit)


def power_window_sync(
    t: Word, s: Word, i: int, j: int, length: int, limit: int = DEFAULT_BUDGETS.window_limit
) -> Word | None:
    """Decides S^i t^ℤ = S^j s^ℤ from the windows t^ℤ_[i,i+length) and s^ℤ_[j,j+length).

    Returns:
        The common base root(t^ℤ_[i,i+|t|)) of both orbits, or None when the windows differ
        (or, below the length |s|+|t|-1, when the orbits differ).
    """
    if length < 0:
        msg = f"Window length must be non-negative, got {length}"
        raise InvalidArgumentError(msg)
    _require_nonempty(t, s)
    if power_window(t, i, i + length, limit) != power_window(s, j, j + length, limit):
        return None
    base_t = root(power_window(t, i, i + len(t), limit))
    base_s = root(power_window(s, j, j + len(s), limit))
    if length >= len(s) + len(t) - 1:
        if base_t != base_s:
            msg = f"Windows of length {length} agree but orbits of {t} and {s} differ"
            raise ConstructionError(msg)
        return base_t
    return base_t if base_t == base_s else None


def overlap_synchronize(u: Word, v: Word, w: Word, t: Word, s: Word) -> bool:
    """Whether uvw occurs in both t^∞ and s^∞, given uv occurs in t^∞ and vw in s^∞."""
    _require_nonempty(t, s)
    if not occurs_in_power(u + v, t):
        msg = f"{u + v} does not occur in {t}^∞"
        raise InvalidArgumentError(msg)
    if not occurs_in_power(v + w, s):
        msg = f"{v + w} does not occur in {s}^∞"
        raise InvalidArgumentError(msg)
    whole = u + v + w
    both = occurs_in_power(whole, t) and occurs_in_power(whole, s)
    if len(v) >= len(t) + len(s) - 1:
        if not both:
            msg = f"{whole} fails to occur in both powers although |v| >= |t| + |s| - 1"
            raise ConstructionError(msg)
        return True
    return both


def bridge_power(u: Word, v: Word, w: Word, t: Word) -> int | None:
    """Exponent k with uvw = root(t)^k, given uv is a prefix of t^∞ and vw a suffix of ...ttt.

    The exponent always exists when |v| >= 2|t|; below that bound it is checked directly.
    """
    _require_nonempty(t)
    if (u + v).symbols != _power_bytes(t.symbols, 0, len(u) + len(v)):
        msg = f"{u + v} is not a prefix of {t}^∞"
        raise InvalidArgumentError(msg)
    tail = v + w
    if not (t.symbols * (ceil(len(tail) / len(t)) + 1)).endswith(tail.symbols):
        msg = f"{tail} is not a suffix of a power of {t}"
        raise InvalidArgumentError(msg)
    base = root(t)
    whole = u + v + w
    exponent, rest = divmod(len(whole), len(base))
    is_power = not rest and whole.symbols == base.symbols * exponent
    if len(v) >= 2 * len(t) and not is_power:
        msg = f"{whole} is not a power of {base} although |v| >= 2|t|"
        raise ConstructionError(msg)
    return exponent if is_power else None


def global_period_from_local(u: Word, V: Iterable[Word]) -> LocalPeriodCertificate:
    """Transfers periods of every factor of length 2|V| to the whole word u.

    Raises:
        InvalidArgumentError: if V is empty or |u| < 2|V|.
        HypothesisViolatedError: naming the first factor that occurs in no power of a word of V.
    """
    candidates = sorted(set(V), key=lambda x: (len(x), x.symbols))
    if not candidates or not all(len(c) for c in candidates):
        msg = "V must be a nonempty set of nonempty words"
        raise InvalidArgumentError(msg)
    bound = max(len(c) for c in candidates)
    if len(u) < 2 * bound:
        msg = f"|u| = {len(u)} is shorter than 2|V| = {2 * bound}"
        raise InvalidArgumentError(msg)
    assignment: dict[Word, Word] = {}
    for start in range(len(u) - 2 * bound + 1):
        factor = u[start : start + 2 * bound]
        if factor in assignment:
            continue
        chosen = next((c for c in candidates if occurs_in_power(factor, c)), None)
        if chosen is None:
            msg = f"Factor {factor} at position {start} occurs in no power of a word of V"
            raise HypothesisViolatedError(msg, witness=factor)
        assignment[factor] = chosen
    for factor, chosen in assignment.items():
        if not occurs_in_power(u, chosen):
            msg = f"{u} does not occur in {chosen}^ℤ chosen for {factor}"
            raise ConstructionError(msg)
    per = period(u)
    if per > bound:
        msg = f"per({u}) = {per} exceeds |V| = {bound}"
        raise ConstructionError(msg)
    return LocalPeriodCertificate(assignment=assignment, bound=bound, period=per)


def aperiodicity_witness(u: Word, k: int) -> tuple[int, Word] | None:
    """A factor t of u with |t| = 2k and per(t) > k, or None when per(u) <= k."""
    if k < 1:
        msg = f"k must be at least 1, got {k}"
        raise InvalidArgumentError(msg)
    _require_nonempty(u)
    if period(u) <= k:
        return None
    if len(u) < 2 * k:
        msg = f"|u| = {len(u)} < 2k = {2 * k} while per(u) > k"
        raise InvalidArgumentError(msg)
    for start in range(len(u) - 2 * k + 1):
        factor = u[start : start + 2 * k]
        if period(factor) > k:
            return start, factor
    msg = f"No factor of length {2 * k} of {u} has period above {k}"
    raise ConstructionError(msg)


def lyndon_words(alphabet: Alphabet, max_length: int) -> Iterator[Word]:
    """Lyndon words of length <= max_length in lexicographic order (Duval's generation)."""
    ordered = sorted(alphabet.symbols)
    top = len(ordered) - 1
    current = [-1]
    while current:
        current[-1] += 1
        yield Word._wrap(bytes(ordered[i] for i in current), alphabet)
        period_length = len(current)
        while len(current) < max_length:
            current.append(current[-period_length])
        while current and current[-1] == top:
            current.pop()


def primitive_representatives(alphabet: Alphabet, max_length: int) -> tuple[Word, ...]:
    """One Lyndon representative per rotation class of primitive words of length <= max_length.

    Returns:
        The representatives ordered by length, then lexicographically.
    """
    if max_length < 1:
        msg = f"max_length must be at least 1, got {max_length}"
        raise InvalidArgumentError(msg)
    return tuple(sorted(lyndon_words(alphabet, max_length), key=lambda w: (len(w), w.symbols)))


def primitive_necklace_count(k: int, n: int) -> int:
    """Number of rotation classes of primitive words of length n over k letters."""
    return sum(int(mobius(d)) * k ** (n // d) for d in divisors(n)) // n
