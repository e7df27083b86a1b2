import pytest
from conftest import BINARY, word
from sadic.config import Budgets
from sadic.constructions import NegativeFamilyParams, negative_directive_sequence
from sadic.errors import GrowthStallError, InvalidArgumentError, NotFoundError, ResourceBudgetError
from sadic.morphisms import Morphism
from sadic.presets import doubling, fibonacci, fibonacci_morphism, periodic_orbit, swap, thue_morse, thue_morse_morphism
from sadic.subshift import (
    ComplexityTable,
    ContractionMode,
    DirectiveSequence,
    LengthStatus,
    SubshiftLanguage,
    complexity,
    contract,
    contraction_boundaries,
    find_low_growth_length,
    find_sparse_low_growth,
    growth_report,
    language,
    left_special,
    pcom_estimate,
    power_set,
    recurrence_analysis,
    right_special,
)
from sadic.verification import fixed_point_prefix
from sadic.words import Alphabet

# p(1..10) of the Thue-Morse subshift
THUE_MORSE_COMPLEXITY = (2, 4, 6, 10, 12, 16, 20, 22, 24, 28)


def strings(words) -> set[str]:
    return {str(w) for w in words}


class TestDirectiveSequence:
    def test_tail_levels_repeat(self):
        dirseq = DirectiveSequence((fibonacci_morphism(), fibonacci_morphism()), tail_period=1)
        assert dirseq.canonical_level(7) == 1
        assert dirseq.tail_start == 1

    def test_alphabets_must_chain(self):
        to_ternary = Morphism.from_mapping(BINARY, Alphabet.of_size(3), {0: "0", 1: "12"})
        with pytest.raises(InvalidArgumentError):
            DirectiveSequence((fibonacci_morphism(), to_ternary), tail_period=None)

    def test_repeated_block_must_be_endomorphic(self):
        ternary = Alphabet.of_size(3)
        to_binary = Morphism.from_mapping(ternary, BINARY, {0: "0", 1: "1", 2: "01"})
        with pytest.raises(InvalidArgumentError, match="endomorphic"):
            DirectiveSequence((to_binary,), tail_period=1)

    def test_finite_sequence_stops(self):
        dirseq = DirectiveSequence((fibonacci_morphism(),), tail_period=None)
        assert dirseq.is_finite
        with pytest.raises(InvalidArgumentError):
            dirseq.morphism(1)

    def test_compose_range(self):
        assert fibonacci().compose_range(0, 3).images == (word("01001"), word("010"))
        assert fibonacci().compose_range(2, 2).images == (word("0"), word("1"))


def test_recurrence_certified_for_primitive_tail():
    assert recurrence_analysis(fibonacci()).certified


class TestLanguage:
    def test_fibonacci_is_sturmian(self, fib_language):
        table = fib_language.complexity(40)
        assert table.counts == tuple(n + 1 for n in range(1, 41))
        assert table.status is LengthStatus.EXACT

    def test_fibonacci_words(self):
        words, status = language(fibonacci(), 0, 3)
        assert strings(words) == {"001", "010", "100", "101"}
        assert status is LengthStatus.EXACT

    def test_thue_morse_complexity(self):
        assert complexity(thue_morse(), 0, 10).counts == THUE_MORSE_COMPLEXITY

    def test_word_sets_agree_with_counts(self, tm_language):
        for n in range(1, 12):
            assert len(tm_language.words(n)) == tm_language.count(n)

    def test_periodic_orbit(self):
        assert complexity(periodic_orbit(), 0, 12).counts == (2,) * 12

    def test_single_letter(self):
        assert complexity(doubling(), 0, 5).counts == (1,) * 5

    def test_level_above_zero(self):
        assert SubshiftLanguage(fibonacci(), 3).words(4) == SubshiftLanguage(fibonacci()).words(4)

    def test_bounded_images_stall(self):
        with pytest.raises(GrowthStallError) as excinfo:
            complexity(swap(), 0, 5, Budgets(max_depth=8))
        assert excinfo.value.min_length == 1

    def test_length_budget(self):
        with pytest.raises(ResourceBudgetError):
            SubshiftLanguage(fibonacci(), 0, Budgets(max_language_length=10)).words(11)

    def test_length_must_be_positive(self):
        with pytest.raises(InvalidArgumentError):
            complexity(fibonacci(), 0, 0)

    def test_finite_sequence_is_lower_approximation(self):
        lang = SubshiftLanguage(DirectiveSequence((fibonacci_morphism(),) * 4, tail_period=None))
        assert lang.status(3) is LengthStatus.LOWER_APPROXIMATION
        assert lang.words(3) <= SubshiftLanguage(fibonacci()).words(3)

    def test_table_records_depth(self, fib_language):
        table = fib_language.table([2, 5])
        assert strings(table.words(2)) == {"00", "01", "10"}
        assert table.stabilization_depth >= 1
        with pytest.raises(InvalidArgumentError):
            table.words(3)

    def test_thue_morse_matches_fixed_point(self):
        prefix = fixed_point_prefix(thue_morse_morphism(), 4096)
        table = complexity(thue_morse(), 0, 40)
        for n in range(1, 41):
            assert table.p(n) == len({prefix[i : i + n] for i in range(len(prefix) - n + 1)})


class TestComplexityTable:
    def test_deltas_and_rows(self):
        table = ComplexityTable((2, 4, 6, 10))
        assert table.deltas() == (2, 2, 4)
        assert table.delta(4) is None
        assert table.rows()[0] == (1, 2, 2)

    def test_csv(self):
        assert ComplexityTable((2, 3, 4)).to_csv() == "n,p,delta\n1,2,1\n2,3,1\n3,4,\n"

    def test_rejects_zero(self):
        with pytest.raises(InvalidArgumentError):
            ComplexityTable((1, 0))


class TestSpecialWords:
    def test_fibonacci(self, fib_language):
        assert strings(right_special(fib_language, 3)) == {"010"}
        assert strings(right_special(fib_language, 4)) == {"0010"}
        assert strings(left_special(fib_language, 4)) == {"0100"}

    def test_thue_morse(self, tm_language):
        assert strings(right_special(tm_language, 4)) == {"0110", "1001"}

    @pytest.mark.parametrize("n", range(1, 20))
    def test_special_words_bound_growth(self, tm_language, n):
        special = right_special(tm_language, n)
        growth = tm_language.count(n + 1) - tm_language.count(n)
        assert len(special) <= growth <= 2 * len(special)

    def test_periodic_has_none(self):
        assert right_special(periodic_orbit(), 5) == frozenset()


class TestPowers:
    def test_power_set(self, fib_language):
        assert power_set(fib_language, word("0"), 3) == (word("0"), word("00"))

    def test_pcom_estimate(self, fib_language):
        assert pcom_estimate(fib_language, 1, 3) == 2

    def test_power_set_needs_base(self, fib_language):
        with pytest.raises(InvalidArgumentError):
            power_set(fib_language, word(""), 3)


class TestLowGrowth:
    def test_low_growth_length(self, fib_language):
        assert find_low_growth_length(fib_language.complexity(20), 5, 1) == 5

    def test_table_too_short(self):
        with pytest.raises(InvalidArgumentError):
            find_low_growth_length(ComplexityTable((2, 3, 4)), 5, 1)

    def test_sparse(self, fib_language):
        certificate = find_sparse_low_growth(fib_language.complexity(40), 2, 3)
        assert (certificate.m, certificate.k) == (3, 6)
        assert certificate.delta <= 4

    def test_sparse_not_found(self, fib_language):
        with pytest.raises(NotFoundError):
            find_sparse_low_growth(fib_language.complexity(40), 1, 3)


class TestContraction:
    def test_growth_contraction(self):
        contracted = contract(fibonacci(), ContractionMode.growth(3))
        assert contracted.levels[0].images == (word("01001"), word("010"))
        assert contracted.tail_period == 1
        assert complexity(contracted, 0, 20) == complexity(fibonacci(), 0, 20)

    def test_fixed_contraction_of_negative_family(self):
        dirseq = negative_directive_sequence(NegativeFamilyParams.minimal((2, 2), (1, 1)))
        contracted = contract(dirseq, ContractionMode.fixed(2))
        assert contracted.levels[0].min_length == 144 * 144
        assert complexity(contracted, 0, 100) == complexity(dirseq, 0, 100)

    def test_fixed_contraction_of_thue_morse(self):
        contracted = contract(thue_morse(), ContractionMode.fixed(2))
        assert complexity(contracted, 0, 40) == complexity(thue_morse(), 0, 40)

    def test_fixed_boundaries(self):
        assert contraction_boundaries(fibonacci(), ContractionMode.fixed(2), 3) == [0, 2, 4, 6]

    def test_mode_parameter_positive(self):
        with pytest.raises(InvalidArgumentError):
            ContractionMode.fixed(0)


class TestGrowthReport:
    def test_fibonacci(self):
        report = growth_report(fibonacci(), 4)
        assert [level.min_length for level in report.levels] == [1, 2, 3, 5]
        assert [level.max_length for level in report.levels] == [2, 3, 5, 8]
        assert [level.positive for level in report.levels] == [False, True, True, True]
        assert report.primitive
        assert report.everywhere_growing

    def test_swap_never_grows(self):
        report = growth_report(swap(), 3)
        assert not report.everywhere_growing
        assert not report.primitive
        assert all(level.min_length == 1 for level in report.levels)
