import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from sadic.factor_index import count_distinct_factors, joined_text, lcp_array, suffix_array

pieces_strategy = st.lists(
    st.lists(st.integers(0, 2), max_size=12).map(bytes),
    min_size=1,
    max_size=4,
)


def brute_counts(pieces: list[bytes], max_length: int) -> list[int]:
    return [
        len({piece[i : i + n] for piece in pieces for i in range(len(piece) - n + 1)})
        for n in range(1, max_length + 1)
    ]


def test_single_piece():
    assert count_distinct_factors([bytes([0, 1, 0, 1])], 4) == [2, 2, 2, 1]


def test_factors_never_cross_pieces():
    assert count_distinct_factors([bytes([0, 0]), bytes([1, 1])], 3) == [2, 2, 0]


def test_nonpositive_length():
    assert count_distinct_factors([bytes([0, 1])], 0) == []


def test_separators_are_unique():
    text, room = joined_text([bytes([1, 2]), bytes([3])])
    assert text.tolist() == [1, 2, 256, 3, 257]
    assert room.tolist() == [2, 1, 0, 1, 0]


@given(pieces_strategy)
def test_suffix_array_sorts_suffixes(pieces):
    text, _ = joined_text(pieces)
    values = text.tolist()
    order = suffix_array(text).tolist()
    assert order == sorted(range(len(values)), key=lambda i: values[i:])


@given(pieces_strategy)
def test_lcp_of_neighbours(pieces):
    text, _ = joined_text(pieces)
    values = text.tolist()
    order = suffix_array(text)
    lcp = lcp_array(text, order).tolist()
    for i in range(1, len(values)):
        a, b = values[order[i - 1] :], values[order[i] :]
        common = next((k for k, (x, y) in enumerate(zip(a, b)) if x != y), min(len(a), len(b)))
        assert lcp[i] == common


@given(pieces_strategy, st.integers(1, 14))
def test_counts_match_brute_force(pieces, max_length):
    assert count_distinct_factors(pieces, max_length) == brute_counts(pieces, max_length)


def test_empty_text():
    assert suffix_array(np.empty(0, dtype=np.int64)).tolist() == []
