import random
from collections import Counter

import pytest
from conftest import BINARY, word
from sadic.cover_bounds import certify_power_cover, cfpz_cover, first_difference_bound, power_cover_px_bound
from sadic.errors import HypothesisViolatedError, InvalidArgumentError
from sadic.morphisms import compose
from sadic.presets import fibonacci, thue_morse, thue_morse_morphism
from sadic.subshift import SubshiftLanguage
from sadic.words import Word


def thue_morse_prefix(length: int) -> Word:
    tm = thue_morse_morphism()
    block = tm
    while block.max_length < length:
        block = compose(block, tm)
    return block.image(0)[:length]


class TestCover:
    @pytest.mark.parametrize("ell", [1, 2, 4])
    def test_thue_morse_prefix(self, ell):
        w = thue_morse_prefix(128)
        cover = cfpz_cover(w, ell)
        assert all(count <= 32 * len(w) / ell for count in cover.counts.values())
        assert all(len(member) >= ell for member in cover.members())
        assert len(list(cover.members())) == len(cover)

    def test_members_are_factors(self):
        w = thue_morse_prefix(64)
        cover = cfpz_cover(w, 3)
        for member in cover.members():
            assert member in w
            assert member in cover

    def test_short_words_are_not_members(self):
        cover = cfpz_cover(thue_morse_prefix(32), 4)
        assert word("011") not in cover

    def test_random_words(self):
        rng = random.Random(7)
        for _ in range(4):
            w = Word(bytes(rng.randint(0, 1) for _ in range(rng.randint(64, 200))), BINARY)
            cover = cfpz_cover(w, 2)
            assert cover.max_length <= len(w)

    @pytest.mark.slow
    def test_random_words_at_full_size(self):
        rng = random.Random(7)
        for _ in range(100):
            size = rng.randint(64, 4096)
            w = Word(bytes(rng.randint(0, 1) for _ in range(size)), BINARY)
            for ell in (1, 2, 4, 8):
                cover = cfpz_cover(w, ell)
                assert cover.max_length <= size
                assert min(cover.counts) >= ell
                assert all(count <= 32 * size / ell for count in cover.counts.values())

    @pytest.mark.slow
    @pytest.mark.parametrize("ell", [2, 4])
    def test_factor_scan(self, ell):
        rng = random.Random(11)
        w = Word(bytes(rng.randint(0, 1) for _ in range(256)), BINARY)
        cover = cfpz_cover(w, ell)
        members = {member.symbols for member in cover.members()}
        assert Counter(len(m) for m in members) == Counter(cover.counts)
        s = w.symbols
        for a in range(len(s)):
            for b in range(a + 64 * ell, len(s) + 1):
                assert any(s[a:c] in members and s[c:b] in members for c in range(a + ell, b - ell + 1))

    @pytest.mark.parametrize("ell", [0, 9])
    def test_ell_range(self, ell):
        with pytest.raises(InvalidArgumentError):
            cfpz_cover(word("01101001"), ell)


class TestPowerCoverBounds:
    def test_fibonacci_blocks(self, fib_language):
        blocks = list(fibonacci().compose_range(0, 5).images)
        check = power_cover_px_bound(fib_language, blocks)
        assert check.passed
        assert check.actual == 9

    def test_thue_morse_first_differences(self, tm_language):
        blocks = list(thue_morse().compose_range(0, 4).images)
        for ell in range(1, 16):
            assert first_difference_bound(tm_language, blocks, ell).passed

    def test_ell_below_shortest_block(self, fib_language):
        blocks = list(fibonacci().compose_range(0, 5).images)
        with pytest.raises(InvalidArgumentError):
            first_difference_bound(fib_language, blocks, 8)

    def test_blocks_must_cover(self, fib_language):
        with pytest.raises(HypothesisViolatedError) as excinfo:
            certify_power_cover(fib_language, [word("0")])
        assert excinfo.value.witness == word("1")

    def test_blocks_over_language_alphabet(self):
        lang = SubshiftLanguage(fibonacci())
        with pytest.raises(InvalidArgumentError):
            certify_power_cover(lang, [])

    @pytest.mark.slow
    @pytest.mark.parametrize("preset", [fibonacci, thue_morse])
    @pytest.mark.parametrize("depth", [5, 6])
    def test_block_depths(self, preset, depth):
        dirseq = preset()
        lang = SubshiftLanguage(dirseq)
        blocks = list(dirseq.compose_range(0, depth).images)
        assert power_cover_px_bound(lang, blocks).passed
        for ell in range(1, min(len(b) for b in blocks)):
            assert first_difference_bound(lang, blocks, ell).passed
