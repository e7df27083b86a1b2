import random
from itertools import combinations, product

import pytest
from conftest import BINARY, binary_words, word
from hypothesis import given
from hypothesis import strategies as st
from sadic.config import DEFAULT_BUDGETS
from sadic.constructions import (
    AnchoredWord,
    DecompositionTag,
    NegativeFamilyParams,
    decompose_special,
    enumerate_P,
    gap_epsilon,
    is_in_K,
    negative_directive_sequence,
    negative_family_verify,
    negative_tau,
    sample_P_minus_K,
    short_images_period,
    synchronize_occurrences,
)
from sadic.constructions import _missing_run
from sadic.errors import HypothesisViolatedError, InvalidArgumentError, VerificationFailedError
from sadic.morphisms import compose
from sadic.presets import fibonacci_morphism
from sadic.subshift import DirectiveSequence
from sadic.words import Word, root
from sympy import divisors


def alternating(length: int) -> bytes:
    return bytes(1 - k % 2 for k in range(length))


def short_power_windows(epsilon: int) -> dict[bytes, bytes]:
    """s^ℤ_[-99ε,99ε) for every primitive s of length <= ε that is least among its rotations."""
    half = 99 * epsilon
    found = {}
    for m in range(1, epsilon + 1):
        for letters in product((0, 1), repeat=m):
            s = bytes(letters)
            rotations = {s[k:] + s[:k] for k in range(m)}
            if len(rotations) == m and s == min(rotations):
                found[bytes(s[k % m] for k in range(-half, half))] = s
    return found


def brute_decomposition(symbols: bytes, epsilon: int) -> tuple[int, DecompositionTag, bytes | None] | None:
    """The (|vu|, tag, base) of least |vu| over every decomposition of either case, or None."""
    n = len(symbols)
    windows = short_power_windows(epsilon)
    size = 198 * epsilon
    candidates = []
    for i in range(n - size + 1):
        base = windows.get(symbols[i : i + size])
        if base is not None and 2 * i >= n - 1000 * epsilon and 2 * (n - i - size) >= n - 1000 * epsilon:
            candidates.append((i + 99 * epsilon, DecompositionTag.A, base))
    start = (n - 1000 * epsilon) // 2
    if not any(symbols[i : i + size] in windows for i in range(start, start + 1000 * epsilon - size + 1)):
        candidates.append((start + 500 * epsilon, DecompositionTag.B, None))
    return min(candidates, key=lambda c: (c[0], c[1] is DecompositionTag.B), default=None)


def planted_word(rng: random.Random, epsilon: int) -> Word:
    n = rng.randint(1000 * epsilon, 5000)
    symbols = bytearray(rng.randint(0, 1) for _ in range(n))
    windows = list(short_power_windows(epsilon))
    for _ in range(rng.randint(0, 2)):
        window = rng.choice(windows)
        i = n // 2 - len(window) // 2 + rng.randint(-600 * epsilon, 600 * epsilon)
        i = min(max(i, 0), n - len(window))
        symbols[i : i + len(window)] = window
    return Word(bytes(symbols), BINARY)


def common_divisor_base(x: AnchoredWord, positions: list[int]) -> Word:
    """The shortest block over the common divisors of all pairwise gaps that tiles x between the positions."""
    start = min(positions)
    common = set.intersection(*(set(divisors(q - p)) for p, q in combinations(sorted(positions), 2)))
    top = max(common)
    block = x.segment(start, start + top).symbols
    size = next(c for c in sorted(common) if block == block[:c] * (top // c))
    return x.segment(start, start + size)


def fibonacci_prefix(length: int) -> Word:
    fib = fibonacci_morphism()
    block = fib
    while block.max_length < length:
        block = compose(block, fib)
    return block.image(0)[:length]

class TestGapEpsilon:
    def test_known_instance(self):
        assert gap_epsilon([1000, 2], 2, 4) == 31

    def test_rejects_small_d(self):
        with pytest.raises(InvalidArgumentError):
            gap_epsilon([1000], 1)

    @given(
        st.integers(2, 5),
        st.integers(2, 40),
        st.lists(st.floats(0, 1, exclude_max=True), max_size=3),
    )
    def test_every_length_clears_the_gap(self, d, ratio, fractions):
        top = (ratio * d) ** (len(fractions) + 3)
        lengths = [top, *(max(1, int(top * f)) for f in fractions)]
        epsilon = gap_epsilon(lengths, d, ratio)
        assert epsilon >= 1
        assert all(x > ratio * epsilon or d * x <= epsilon for x in lengths)


class TestDecomposition:
    def test_alternating_word_without_short_power(self):
        w = word("01" * 500)
        decomposition = decompose_special(w, 1)
        assert decomposition.tag is DecompositionTag.B
        assert len(decomposition.u) == len(decomposition.u_prime) == 500
        assert decomposition.word == w

    def test_alternating_word_is_a_power_window(self):
        decomposition = decompose_special(word("01" * 1000), 2)
        assert decomposition.tag is DecompositionTag.A
        assert decomposition.base == word("01")
        assert decomposition.prefix_length == 198

    def test_planted_run(self):
        symbols = bytearray(b"\x00\x01" * 600)
        symbols[500:698] = b"\x00" * 198
        w = Word(bytes(symbols), BINARY)
        decomposition = decompose_special(w, 1)
        assert decomposition.tag is DecompositionTag.A
        assert decomposition.base == word("0")
        assert len(decomposition.v) == 500

    def test_needs_long_word(self):
        with pytest.raises(InvalidArgumentError):
            decompose_special(word("01" * 10), 1)

    @pytest.mark.parametrize("n", [1000, 1001])
    def test_window_at_the_start(self, n):
        w = Word(b"\x00" * 198 + alternating(n - 198), BINARY)
        if n % 2:
            with pytest.raises(HypothesisViolatedError) as excinfo:
                decompose_special(w, 1)
            assert excinfo.value.witness == 0
        else:
            decomposition = decompose_special(w, 1)
            assert decomposition.tag is DecompositionTag.A
            assert decomposition.prefix_length == 99

    def test_window_shifted_into_range(self):
        w = Word(b"\x01" + b"\x00" * 198 + alternating(802), BINARY)
        decomposition = decompose_special(w, 1)
        assert decomposition.tag is DecompositionTag.A
        assert decomposition.base == word("0")
        assert len(decomposition.v) == 1
        assert decomposition.prefix_length == 100

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_exhaustive_search(self, seed):
        rng = random.Random(seed)
        for epsilon in (1, 2):
            w = planted_word(rng, epsilon)
            expected = brute_decomposition(w.symbols, epsilon)
            if expected is None:
                with pytest.raises(HypothesisViolatedError):
                    decompose_special(w, epsilon)
                continue
            found = decompose_special(w, epsilon)
            assert (found.prefix_length, found.tag) == expected[:2]
            assert (found.base.symbols if found.base is not None else None) == expected[2]
            assert found.v + found.u + found.u_prime + found.v_prime == w


class TestNegativeFamily:
    def test_minimal_exponents(self):
        params = NegativeFamilyParams.minimal((2, 2), (1, 1))
        assert params.exponents == ((8, 64), (8, 64))
        assert params.block_counts == (2, 2)

    def test_exponent_range_checked(self):
        with pytest.raises(InvalidArgumentError):
            NegativeFamilyParams((1,), ((16,),))

    def test_images_are_swaps(self):
        tau = negative_tau(NegativeFamilyParams.minimal((2,), (1,)), 0)
        assert tau.image(0) == word("0" * 8 + "1" * 8 + "0" * 64 + "1" * 64)
        assert tau.image(1) == word("1" * 8 + "0" * 8 + "1" * 64 + "0" * 64)

    def test_sequence_is_marked_primitive(self):
        dirseq = negative_directive_sequence(NegativeFamilyParams.minimal((2, 2), (1, 1)))
        assert dirseq.primitive_hint
        assert len(dirseq.levels) == 2

    def test_two_blocks_verified(self):
        report = negative_family_verify(NegativeFamilyParams.minimal((2, 2), (1, 1)), 2, 512)
        assert report.passed
        assert [item.name for item in report.items] == [
            "linear-complexity",
            "equal-lengths",
            "recognizability",
            "separated-runs",
        ]
        assert report.max_ratio <= 1024

    def test_single_block_is_not_recognizable(self):
        params = NegativeFamilyParams.minimal((1,), (1,))
        report = negative_family_verify(params, 1, 64, raise_on_failure=False)
        failed = [item.name for item in report.items if not item.passed]
        assert failed == ["recognizability"]
        assert report.lines()[2].startswith("FAIL recognizability")
        with pytest.raises(VerificationFailedError) as excinfo:
            negative_family_verify(params, 1, 64)
        assert excinfo.value.item == "recognizability"

    def test_separated_runs_reach_the_last_level(self):
        dirseq = DirectiveSequence((fibonacci_morphism(),) * 3, tail_period=1)
        exponents = ((1,), (1,), (5,))
        assert _missing_run(dirseq, exponents, 1, DEFAULT_BUDGETS) is None
        assert _missing_run(dirseq, exponents, 2, DEFAULT_BUDGETS) == "level 2: 1 0^5 1"


class TestCounting:
    def test_enumerate(self):
        tuples = list(enumerate_P(8, 1, 1))
        assert tuples[0] == (64,)
        assert tuples[-1] == (127,)
        assert len(tuples) == 64

    def test_membership(self):
        assert is_in_K([64, 65], 8, 2)
        assert not is_in_K([64], 8, 1)

    def test_sample(self):
        assert sample_P_minus_K(8, 1, 1, 1) == (64,)
        assert sample_P_minus_K(8, 1, 2, 1) is None


class TestSynchronization:
    def test_common_period(self):
        x = AnchoredWord(word("0010010010010010"), origin=0)
        y = word("0010010010")
        assert synchronize_occurrences(x, y, [0, 3], [10, 10]) == word("001")

    def test_single_occurrence(self):
        x = AnchoredWord(word("01010"), origin=2)
        assert synchronize_occurrences(x, word("010"), [0], [3]) == word("010")

    def test_mismatch(self):
        x = AnchoredWord(word("0010010010010010"))
        with pytest.raises(HypothesisViolatedError):
            synchronize_occurrences(x, word("1111"), [0], [4])

    def test_spread_too_wide(self):
        x = AnchoredWord(word("0010010010010010"))
        with pytest.raises(HypothesisViolatedError):
            synchronize_occurrences(x, word("001001"), [0, 6], [6, 6])

    @given(binary_words(1, 4), st.lists(st.integers(1, 5), min_size=1, max_size=3, unique=True), st.integers(0, 3))
    def test_matches_common_divisors(self, t, multiples, shift):
        positions = [shift] + [shift + m * len(t) for m in multiples]
        size = 2 * (max(positions) - shift)
        total = max(positions) + size
        x = AnchoredWord(Word((t.symbols * (total // len(t) + 1))[:total], BINARY))
        y = x.segment(shift, shift + size)
        found = synchronize_occurrences(x, y, positions, [size] * len(positions))
        assert found == common_divisor_base(x, positions)


class TestShortImages:
    def test_periodic_stretch(self):
        x = AnchoredWord(word("001" * 40))
        assert short_images_period(x, list(range(36, 118, 3)), 36, 2) == 3

    def test_bounded_by_gap_epsilon(self):
        d = 2
        epsilon = gap_epsilon([3, 1536], d, 4)
        assert d * 3 <= epsilon
        x = AnchoredWord(word("001" * 40))
        assert short_images_period(x, list(range(36, 118, 3)), 36, d) <= epsilon

    @given(binary_words(1, 4), st.lists(st.integers(1, 2), min_size=4, max_size=8), st.integers(1, 3))
    def test_period_within_d_ell(self, base, steps, d):
        ell = max(steps) * len(base)
        n = 6 * d * ell
        cuts = [n]
        for step in steps:
            cuts.append(cuts[-1] + step * len(base))
        x = AnchoredWord(Word((base.symbols * (cuts[-1] // len(base) + 1))[: cuts[-1]], BINARY))
        found = short_images_period(x, cuts, n, d)
        assert found <= d * ell
        assert found == len(root(base))

    def test_too_many_contexts(self):
        x = AnchoredWord(fibonacci_prefix(120))
        with pytest.raises(HypothesisViolatedError):
            short_images_period(x, list(range(40, 61)), 30, 1)

    def test_long_image(self):
        x = AnchoredWord(word("001" * 40))
        with pytest.raises(HypothesisViolatedError):
            short_images_period(x, [36, 40, 43, 46, 49], 36, 2)

    def test_needs_more_than_d_gaps(self):
        x = AnchoredWord(word("001" * 40))
        with pytest.raises(InvalidArgumentError):
            short_images_period(x, [36, 39, 42], 36, 2)
