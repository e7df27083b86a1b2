"""Distinct-factor counting for every length at once.

A set of words is joined with pairwise distinct separators; the suffix array
(prefix doubling on numpy arrays) and the Kasai LCP array then give, for each
length ℓ, the number of distinct separator-free factors of length ℓ.
"""

import logging
from collections.abc import Sequence

import numpy as np

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
SEPARATOR_BASE = 256


def joined_text(pieces: Sequence[bytes]) -> tuple[np.ndarray, np.ndarray]:
    """Concatenates pieces with unique separators.

    Returns:
        The text as an int64 array and, for every position, the number of symbols
        before the next separator (0 on separators).
    """
    total = sum(len(piece) for piece in pieces) + len(pieces)
    text = np.empty(total, dtype=np.int64)
    room = np.empty(total, dtype=np.int64)
    at = 0
    for index, piece in enumerate(pieces):
        size = len(piece)
        text[at : at + size] = np.frombuffer(piece, dtype=np.uint8)
        room[at : at + size] = np.arange(size, 0, -1)
        text[at + size] = SEPARATOR_BASE + index
        room[at + size] = 0
        at += size + 1
    return text, room


def suffix_array(text: np.ndarray) -> np.ndarray:
    """Suffix array by prefix doubling; ranks are refined with numpy lexsort."""
    n = len(text)
    if n == 0:
        return np.empty(0, dtype=np.int64)
    _, rank = np.unique(text, return_inverse=True)
    rank = rank.astype(np.int64)
    step = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: max(n - step, 0)] = rank[step:]
        order = np.lexsort((second, rank))
        first_sorted, second_sorted = rank[order], second[order]
        changed = (first_sorted[1:] != first_sorted[:-1]) | (second_sorted[1:] != second_sorted[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.concatenate(([0], np.cumsum(changed)))
        rank = new_rank
        if rank.max() == n - 1 or step >= n:
            return order
        step *= 2


def lcp_array(text: np.ndarray, order: np.ndarray) -> np.ndarray:
    """Kasai's algorithm: lcp[i] is the common prefix of suffixes order[i-1] and order[i] (lcp[0] = 0)."""
    n = len(text)
    values = text.tolist()
    suffixes = order.tolist()
    position = [0] * n
    for i, suffix in enumerate(suffixes):
        position[suffix] = i
    lcp = [0] * n
    h = 0
    for suffix in range(n):
        i = position[suffix]
        if i == 0:
            h = 0
            continue
        previous = suffixes[i - 1]
        while suffix + h < n and previous + h < n and values[suffix + h] == values[previous + h]:
            h += 1
        lcp[i] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


def count_distinct_factors(pieces: Sequence[bytes], max_length: int) -> list[int]:
    """Number of distinct factors of each length 1..max_length occurring in some piece."""
    if max_length < 1:
        return []
    text, room = joined_text(pieces)
    order = suffix_array(text)
    lcp = lcp_array(text, order)
    available = np.minimum(room[order], max_length)
    starts = lcp + 1
    live = starts <= available
    diff = np.zeros(max_length + 2, dtype=np.int64)
    np.add.at(diff, starts[live], 1)
    np.add.at(diff, available[live] + 1, -1)
    counts = np.cumsum(diff)[1 : max_length + 1]
    logger.debug("Counted factors over %d symbols up to length %d", len(text), max_length)
    return [int(c) for c in counts]
