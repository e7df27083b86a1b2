"""Explicit constructions: length gaps, special decompositions, the linear-complexity
family with unbounded alphabet rank, exponent-set counting, and occurrence synchronization."""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from itertools import combinations, product
from math import ceil, comb, gcd

from .codings import Coding, recognizability_radius
from .config import DEFAULT_BUDGETS, Budgets
from .errors import (
    ConstructionError,
    HypothesisViolatedError,
    InvalidArgumentError,
    ResourceBudgetError,
    VerificationFailedError,
)
from .morphisms import Morphism
from .subshift import DirectiveSequence, SubshiftLanguage
from .words import Alphabet, Word, period, power_window, primitive_representatives, root

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
DEFAULT_GAP_RATIO = 10**4
WINDOW_HALF = 99
BRANCH_HALF = 500
SLACK = 302
LINEAR_CONSTANT = 1024
DIRECT_RADIUS_LIMIT = 1024
BINARY = Alphabet.binary()


def gap_epsilon(lengths: Iterable[int], d: int, ratio: int = DEFAULT_GAP_RATIO) -> int:
    """ε with every length either > ratio·ε or <= ε/d.

    Lengths are sorted into the bands (L/d₀^(b+1), L/d₀^b], d₀ = ratio·d, b = 1..#lengths+1;
    the least empty band b gives ε = ⌊d·L/d₀^(b+1)⌋.

    Raises:
        InvalidArgumentError: if d < 2, ratio < 2, a length is not positive, or ε would be 0.
    """
    values = list(lengths)
    if d < 2 or ratio < 2:
        msg = f"gap_epsilon needs d >= 2 and ratio >= 2, got d={d}, ratio={ratio}"
        raise InvalidArgumentError(msg)
    if not values or min(values) < 1:
        msg = "gap_epsilon needs a nonempty collection of positive lengths"
        raise InvalidArgumentError(msg)
    top = max(values)
    base = ratio * d
    for band in range(1, len(values) + 2):
        if not any(x * base ** (band + 1) > top >= x * base**band for x in values):
            break
    else:
        msg = f"All {len(values) + 1} bands are occupied by {len(values)} lengths"
        raise ConstructionError(msg)
    epsilon = d * top // base ** (band + 1)
    if epsilon == 0:
        msg = f"Lengths are too small for d={d}, ratio={ratio}: the gap in band {band} rounds to 0"
        raise InvalidArgumentError(msg)
    for x in values:
        if not (x > ratio * epsilon or x * d <= epsilon):
            msg = f"Length {x} is neither > {ratio * epsilon} nor <= {epsilon}/{d}"
            raise ConstructionError(msg)
    logger.debug("gap_epsilon: band %d empty, ε = %d", band, epsilon)
    return epsilon


class DecompositionTag(StrEnum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Decomposition:
    """w = v·u·u′·v′.

    Tag A: uu′ is the window s^ℤ_[-99ε,99ε) of a primitive s of length <= ε.
    Tag B: |u| = |u′| = 500ε and no such window occurs in uu′.
    """

    v: Word
    u: Word
    u_prime: Word
    v_prime: Word
    tag: DecompositionTag
    epsilon: int
    base: Word | None = None

    @property
    def word(self) -> Word:
        return self.v + self.u + self.u_prime + self.v_prime

    @property
    def prefix_length(self) -> int:
        """|vu|, the quantity the decomposition minimizes."""
        return len(self.v) + len(self.u)


def special_windows(alphabet: Alphabet, epsilon: int) -> dict[bytes, Word]:
    """s^ℤ_[-99ε,99ε) for each Lyndon representative s of length <= ε."""
    return {
        power_window(s, -WINDOW_HALF * epsilon, WINDOW_HALF * epsilon).symbols: s
        for s in primitive_representatives(alphabet, epsilon)
    }


def decompose_special(w: Word, epsilon: int) -> Decomposition:
    """The decomposition of w minimizing |vu|; tag A before tag B on ties.

    Raises:
        InvalidArgumentError: if ε < 1 or |w| < 1000ε.
        HypothesisViolatedError: if neither case applies (a window sits just outside the tag-A range).
    """
    n = len(w)
    if epsilon < 1 or n < 2 * BRANCH_HALF * epsilon:
        msg = f"decompose_special needs ε >= 1 and |w| >= {2 * BRANCH_HALF}ε, got |w|={n}, ε={epsilon}"
        raise InvalidArgumentError(msg)
    windows = special_windows(w.alphabet, epsilon)
    size = 2 * WINDOW_HALF * epsilon
    half = WINDOW_HALF * epsilon
    first = ceil(Fraction(n, 2) - BRANCH_HALF * epsilon)
    last = (n + 2 * SLACK * epsilon) // 2
    symbols = w.symbols
    for i in range(first, last + 1):
        base = windows.get(symbols[i : i + size])
        if base is not None:
            return Decomposition(
                v=w[:i],
                u=w[i : i + half],
                u_prime=w[i + half : i + size],
                v_prime=w[i + size :],
                tag=DecompositionTag.A,
                epsilon=epsilon,
                base=base,
            )

    start = (n - 2 * BRANCH_HALF * epsilon) // 2
    branch = BRANCH_HALF * epsilon
    middle = symbols[start : start + 2 * branch]
    hit = next((i for i in range(len(middle) - size + 1) if middle[i : i + size] in windows), None)
    if hit is not None:
        msg = f"Window of {windows[middle[hit : hit + size]]} at {start + hit} rules out both cases"
        raise HypothesisViolatedError(msg, witness=start + hit)
    return Decomposition(
        v=w[:start],
        u=w[start : start + branch],
        u_prime=w[start + branch : start + 2 * branch],
        v_prime=w[start + 2 * branch :],
        tag=DecompositionTag.B,
        epsilon=epsilon,
    )


@dataclass(frozen=True)
class NegativeFamilyParams:
    """Per level n: scale k_n and exponents p^n_1..p^n_ℓ with p^n_j in [8^j·k_n, 2·8^j·k_n)."""

    scales: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "scales", tuple(self.scales))
        object.__setattr__(self, "exponents", tuple(tuple(row) for row in self.exponents))
        if not self.scales or len(self.scales) != len(self.exponents):
            msg = f"Need one scale per level: {len(self.scales)} scales, {len(self.exponents)} exponent rows"
            raise InvalidArgumentError(msg)
        for n, (k, row) in enumerate(zip(self.scales, self.exponents, strict=True)):
            if k < 1 or not row:
                msg = f"Level {n} needs k_n >= 1 and at least one block"
                raise InvalidArgumentError(msg)
            for j, p in enumerate(row, start=1):
                if not 8**j * k <= p < 2 * 8**j * k:
                    msg = f"p^{n}_{j} = {p} is outside [{8**j * k}, {2 * 8**j * k})"
                    raise InvalidArgumentError(msg)

    @property
    def block_counts(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.exponents)

    @classmethod
    def minimal(cls, block_counts: Sequence[int], scales: Sequence[int]) -> "NegativeFamilyParams":
        """Every exponent at the bottom of its range, p^n_j = 8^j·k_n."""
        return cls(tuple(scales), tuple(tuple(8**j * k for j in range(1, count + 1)) for count, k in zip(block_counts, scales, strict=True)))


def negative_tau(params: NegativeFamilyParams, n: int) -> Morphism:
    """τ_n(a) = a^p₁ ā^p₁ ... a^p_ℓ ā^p_ℓ on {0, 1}."""
    if not 0 <= n < len(params.exponents):
        msg = f"Level {n} is outside the {len(params.exponents)} given levels"
        raise InvalidArgumentError(msg)
    images = {a: b"".join(bytes([a]) * p + bytes([1 - a]) * p for p in params.exponents[n]) for a in (0, 1)}
    return Morphism(BINARY, BINARY, tuple(Word._wrap(images[a], BINARY) for a in (0, 1)))


def negative_directive_sequence(params: NegativeFamilyParams) -> DirectiveSequence:
    """The family as a directive sequence whose last level repeats forever."""
    levels = tuple(negative_tau(params, n) for n in range(len(params.exponents)))
    return DirectiveSequence(levels, tail_period=1, primitive_hint=True)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"PASS {self.name}" if self.passed else f"FAIL {self.name} {self.detail}"


@dataclass(frozen=True)
class NegativeFamilyReport:
    items: tuple[CheckResult, ...]
    max_ratio: Fraction
    depth: int
    k_max: int

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def lines(self) -> list[str]:
        return [item.line() for item in self.items] + [f"max p(k)/k = {float(self.max_ratio):.4f}"]


def negative_family_verify(
    params: NegativeFamilyParams,
    depth: int,
    k_max: int,
    budgets: Budgets = DEFAULT_BUDGETS,
    *,
    raise_on_failure: bool = True,
) -> NegativeFamilyReport:
    """Checks the four properties of the family up to the given depth and length.

    1. p(k) <= 1024·k for k <= k_max.
    2. |τ_[0,n)(0)| = |τ_[0,n)(1)|, the images being letter swaps of each other.
    3. (X^(n+1), τ_n) is recognizable with radius at most |τ_n| for n < depth, which composes
       to (X^(n), τ_[0,n)); the composed pairs are also checked directly while |τ_[0,n)| is small.
    4. 1·0^p·1 is legal in X^(n) for every exponent p of level n.

    Raises:
        VerificationFailedError: on the first failing item, unless raise_on_failure is False.
    """
    if depth < 1 or k_max < 1:
        msg = f"depth and k_max must be positive, got depth={depth}, k_max={k_max}"
        raise InvalidArgumentError(msg)
    dirseq = negative_directive_sequence(params)
    items: list[CheckResult] = []

    table = SubshiftLanguage(dirseq, 0, budgets).complexity(k_max)
    over = next((k for k in range(1, k_max + 1) if table.p(k) > LINEAR_CONSTANT * k), None)
    max_ratio = max(Fraction(table.p(k), k) for k in range(1, k_max + 1))
    items.append(
        CheckResult("linear-complexity", over is None, "" if over is None else f"p({over}) = {table.p(over)}")
    )

    swapped = bytes.maketrans(b"\x00\x01", b"\x01\x00")
    asymmetric = None
    for n in range(1, depth + 1):
        block = dirseq.compose_range(0, n)
        zero, one = block.images
        if len(zero) != len(one) or zero.symbols.translate(swapped) != one.symbols:
            asymmetric = n
            break
    items.append(CheckResult("equal-lengths", asymmetric is None, "" if asymmetric is None else f"level {asymmetric}"))

    slow = None
    for n in range(depth):
        tau = dirseq.morphism(n)
        radius = recognizability_radius(Coding(tau, SubshiftLanguage(dirseq, n + 1, budgets)), tau.max_length, budgets)
        logger.debug("Negative family: radius %s for τ_%d (|τ| = %d)", radius, n, tau.max_length)
        if radius is None:
            slow = f"τ_{n} on level {n + 1}: not recognizable up to {tau.max_length}"
            break
    for n in range(2, depth + 1):
        block = dirseq.compose_range(0, n)
        if slow or block.max_length > DIRECT_RADIUS_LIMIT:
            break
        if recognizability_radius(Coding(block, SubshiftLanguage(dirseq, n, budgets)), block.max_length, budgets) is None:
            slow = f"τ_[0,{n}) on level {n}: not recognizable up to {block.max_length}"
    items.append(CheckResult("recognizability", slow is None, slow or ""))

    missing = _missing_run(dirseq, params.exponents, depth, budgets)
    items.append(CheckResult("separated-runs", missing is None, missing or ""))

    report = NegativeFamilyReport(tuple(items), max_ratio, depth, k_max)
    failed = next((item for item in report.items if not item.passed), None)
    if failed and raise_on_failure:
        raise VerificationFailedError(failed.name, failed.detail)
    logger.info("Negative family verified to depth %d, max p(k)/k = %s", depth, float(max_ratio))
    return report


def _missing_run(
    dirseq: DirectiveSequence, exponents: Sequence[Sequence[int]], depth: int, budgets: Budgets
) -> str | None:
    """The first level n <= depth with an exponent p of that level such that 1 0^p 1 is not legal there."""
    for n in range(depth + 1):
        lang = SubshiftLanguage(dirseq, n, budgets)
        for p in exponents[dirseq.canonical_level(n)]:
            run = Word._wrap(b"\x01" + b"\x00" * p + b"\x01", BINARY)
            if run not in lang.words(p + 2):
                return f"level {n}: 1 0^{p} 1"
    return None


def _exponent_ranges(n: int, n0: int, ell: int) -> list[range]:
    return [range(ceil(Fraction(8**j * n, n0)), ceil(Fraction(2 * 8**j * n, n0))) for j in range(1, ell + 1)]


def enumerate_P(n: int, n0: int, ell: int, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[tuple[int, ...]]:  # noqa: N802
    """Tuples (p_1..p_ℓ) with p_j·n₀ in [8^j·n, 2·8^j·n), in lexicographic order."""
    if min(n, n0, ell) < 1:
        msg = f"n, n0 and ell must be positive, got {n}, {n0}, {ell}"
        raise InvalidArgumentError(msg)
    ranges = _exponent_ranges(n, n0, ell)
    total = 1
    for r in ranges:
        total *= len(r)
    if total > budgets.max_enumeration:
        msg = f"P({n}, {n0}, {ell}) has {total} tuples, over the enumeration budget"
        raise ResourceBudgetError(msg)
    return product(*ranges)


def _reachable(generators: tuple[int, ...], top: int) -> int:
    """Bitmask of the sums <= top of non-negative integer combinations of the generators."""
    mask = (1 << (top + 1)) - 1
    reach = 1
    for e in generators:
        shift = e
        while shift <= top:
            reach |= (reach << shift) & mask
            shift *= 2
    return reach


def _generator_sets(n: int, d: int, budgets: Budgets) -> Iterator[tuple[int, ...]]:
    interval = range(ceil(Fraction(n, d)), d * n)
    total = sum(comb(len(interval), size) for size in range(d + 1))
    if total > budgets.max_enumeration:
        msg = f"{total} generator sets in [{interval.start}, {interval.stop}) exceed the enumeration budget"
        raise ResourceBudgetError(msg)
    for size in range(d + 1):
        yield from combinations(interval, size)


def is_in_K(values: Sequence[int], n: int, d: int, budgets: Budgets = DEFAULT_BUDGETS) -> bool:  # noqa: N802
    """Whether some E ⊆ [n/d, dn) with #E <= d generates every value as a non-negative combination."""
    if d < 1 or n < 1:
        msg = f"n and d must be positive, got n={n}, d={d}"
        raise InvalidArgumentError(msg)
    top = max(values, default=0)
    for generators in _generator_sets(n, d, budgets):
        reach = _reachable(generators, top)
        if all(reach >> k & 1 for k in values):
            return True
    return False


def sample_P_minus_K(  # noqa: N802
    n: int, n0: int, d: int, ell: int, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, ...] | None:
    """The first tuple of P(n, n₀, ℓ) outside K(n, d, ℓ), or None."""
    top = max((r.stop - 1 for r in _exponent_ranges(n, n0, ell)), default=0)
    reaches = [_reachable(generators, top) for generators in _generator_sets(n, d, budgets)]
    for values in enumerate_P(n, n0, ell, budgets):
        if not any(all(reach >> k & 1 for k in values) for reach in reaches):
            return values
    return None


@dataclass(frozen=True)
class AnchoredWord:
    """A finite window of a point; index i of the point is word[origin + i]."""

    word: Word
    origin: int = 0

    def segment(self, start: int, stop: int) -> Word:
        lo, hi = self.origin + start, self.origin + stop
        if lo < 0 or hi > len(self.word) or lo > hi:
            msg = f"Segment [{start}, {stop}) is outside the known window"
            raise InvalidArgumentError(msg)
        return self.word[lo:hi]


def synchronize_occurrences(
    x: AnchoredWord, y: Word, positions: Sequence[int], lengths: Sequence[int]
) -> Word:
    """The word w such that x between any two of the occurrences of prefixes of y is a power of w.

    Every occurrence x_[p_j, p_j+ℓ_j) equals y_[0,ℓ_j), and every pair of positions is at
    most min ℓ_k / 2 apart; w is the root of x_[p_min, p_min + g), g the gcd of the gaps.
    """
    if not positions or len(positions) != len(lengths):
        msg = "positions and lengths must be nonempty and of equal size"
        raise InvalidArgumentError(msg)
    if len(set(positions)) != len(positions):
        msg = f"Positions must be distinct, got {list(positions)}"
        raise InvalidArgumentError(msg)
    for p, size in zip(positions, lengths, strict=True):
        if size < 1 or size > len(y) or x.segment(p, p + size) != y[:size]:
            msg = f"x at {p} does not match the prefix of y of length {size}"
            raise HypothesisViolatedError(msg, witness=p)
    spread = max(positions) - min(positions)
    if 2 * spread > min(lengths):
        msg = f"Positions spread {spread} exceeds half the shortest occurrence {min(lengths)}"
        raise HypothesisViolatedError(msg, witness=spread)

    ordered = sorted(zip(positions, lengths, strict=True))
    start = ordered[0][0]
    if len(ordered) == 1:
        return root(x.segment(start, start + ordered[0][1]))
    step = 0
    for p, _ in ordered[1:]:
        step = gcd(step, p - start)
    base = root(x.segment(start, start + step))
    for (p, size_p), (q, size_q) in combinations(ordered, 2):
        between = x.segment(p, q)
        if between.symbols != base.symbols * (len(between) // len(base)) or len(between) % len(base):
            msg = f"x_[{p},{q}) is not a power of {base}"
            raise ConstructionError(msg)
        reach = x.segment(p, q + min(size_p, size_q))
        if reach.symbols != (base.symbols * (len(reach) // len(base) + 1))[: len(reach)]:
            msg = f"x_[{p},{q}+{min(size_p, size_q)}) is not a prefix of {base}^∞"
            raise ConstructionError(msg)
    return base


def short_images_period(x: AnchoredWord, cuts: Sequence[int], n: int, d: int) -> int:
    """per(x_[c_0 - n/3, c_{m-d})) for cuts c_0 < ... < c_m of a coding with short images.

    Needs m > d, every gap c_{k+1} - c_k at most ℓ with 6dℓ <= n, and at most d distinct
    left contexts x_[c_k - n, c_k) over k < m. Any d + 1 consecutive cuts then repeat a
    context, so each x_[c_k - 2n/3, c_{k+1}) has period at most dℓ, and the overlaps glue
    these into the returned period, which is at most dℓ.

    Raises:
        InvalidArgumentError: if the cuts are not increasing, m <= d, or d < 1.
        HypothesisViolatedError: if a gap exceeds n/6d or more than d contexts occur.
        ConstructionError: if the returned period would exceed dℓ.
    """
    if d < 1 or len(cuts) < d + 2:
        msg = f"Need d >= 1 and more than d + 1 cuts, got d={d} with {len(cuts)} cuts"
        raise InvalidArgumentError(msg)
    gaps = [q - p for p, q in zip(cuts, cuts[1:], strict=False)]
    if min(gaps) < 1:
        msg = f"Cuts must be strictly increasing, got {list(cuts)}"
        raise InvalidArgumentError(msg)
    longest = max(gaps)
    if 6 * d * longest > n:
        msg = f"Image length {longest} exceeds n/6d = {n}/{6 * d}"
        raise HypothesisViolatedError(msg, witness=longest)
    contexts = {x.segment(c - n, c).symbols for c in cuts[:-1]}
    if len(contexts) > d:
        msg = f"{len(contexts)} distinct left contexts of length {n} exceed d = {d}"
        raise HypothesisViolatedError(msg, witness=len(contexts))

    found = period(x.segment(cuts[0] - n // 3, cuts[-1 - d]))
    if found > d * longest:
        msg = f"Period {found} exceeds d·ℓ = {d * longest}"
        raise ConstructionError(msg)
    return found
