"""Word, CyclicString, ranking and window tests."""

# pylint: disable=missing-function-docstring

import itertools
import numpy as np
import pytest
from hypothesis import given, strategies as st
from ucyc.core import (
    OrderedAlphabet,
    Word,
    CyclicString,
    RankOutOfRangeError,
    WindowLengthError,
    SymbolIndexError,
    rank,
    unrank,
    cyclic_windows,
    least_rotation,
    digits_of,
    ranks_of,
    window_digits,
)

BINARY = OrderedAlphabet.from_tokens("0,1")


def texts(words):
    return [w.to_text(BINARY) for w in words]


def test_word_basics():
    w = Word.from_text("0110", BINARY)
    assert w.letters == (0, 1, 1, 0)
    assert w.length == len(w) == 4
    assert w.prefix() == Word((0, 1, 1))
    assert w.suffix() == Word((1, 1, 0))
    assert w.to_text(BINARY) == "0110"
    with pytest.raises(ValueError):
        Word(())
    with pytest.raises(SymbolIndexError):
        Word((0, 2)).check(BINARY)


@pytest.mark.parametrize(
    "alphabet, text, expected",
    [(BINARY, "000", 0), (BINARY, "111", 7), (OrderedAlphabet.from_tokens("A,B,C"), "AB", 1)],
)
def test_rank(alphabet, text, expected):
    assert rank(Word.from_text(text, alphabet), alphabet) == expected


def test_unrank_out_of_range():
    with pytest.raises(RankOutOfRangeError):
        unrank(8, 3, BINARY)
    with pytest.raises(RankOutOfRangeError):
        unrank(-1, 3, BINARY)


def test_rank_unrank_round_trip_exhaustively():
    for n in range(1, 5):
        ab = OrderedAlphabet.of_size(n)
        for k in range(1, 7):
            for r in range(n**k):
                w = unrank(r, k, ab)
                assert w.length == k
                assert rank(w, ab) == r


def test_rank_is_lexicographic():
    ab = OrderedAlphabet.of_size(3)
    words = [Word(p) for p in itertools.product(range(3), repeat=3)]
    assert [rank(w, ab) for w in words] == list(range(27))


def test_array_ranking_agrees_with_scalar_ranking():
    ab = OrderedAlphabet.of_size(3)
    digits = digits_of(np.arange(81), 3, 4)
    assert digits.shape == (81, 4)
    assert [tuple(row) for row in digits.tolist()] == [
        unrank(r, 4, ab).letters for r in range(81)
    ]
    assert ranks_of(digits, 3).tolist() == list(range(81))


def test_cyclic_windows():
    assert texts(cyclic_windows(CyclicString.from_text("0011", BINARY), 2)) == [
        "00",
        "01",
        "11",
        "10",
    ]


def test_cyclic_windows_of_de_bruijn_cycle():
    windows = texts(cyclic_windows(CyclicString.from_text("11101000", BINARY), 3))
    assert len(windows) == 8
    assert sorted(windows) == ["".join(p) for p in itertools.product("01", repeat=3)]


def test_cyclic_windows_of_monotone_cycle():
    windows = texts(cyclic_windows(CyclicString.from_text("00010011110110", BINARY), 4))
    assert len(windows) == len(set(windows)) == 14
    all_words = {"".join(p) for p in itertools.product("01", repeat=4)}
    assert all_words - set(windows) == {"0101", "1010"}


def test_cyclic_windows_too_long():
    with pytest.raises(WindowLengthError):
        cyclic_windows(CyclicString((0, 1)), 3)


def test_window_digits_wraps_repeatedly():
    assert window_digits((0, 1), 5).tolist() == [[0, 1, 0, 1, 0], [1, 0, 1, 0, 1]]


@given(
    st.lists(st.integers(0, 3), min_size=1, max_size=12),
    st.integers(0, 30),
    st.integers(1, 12),
)
def test_cyclic_windows_are_rotation_covariant(letters, r, k):
    cycle = CyclicString(tuple(letters))
    k = min(k, cycle.length)
    windows = cyclic_windows(cycle, k)
    shift = r % cycle.length
    assert cyclic_windows(cycle.rotate(r), k) == windows[shift:] + windows[:shift]


def test_canonical_rotation():
    assert CyclicString.from_text("0110", BINARY).canonical().letters == (0, 0, 1, 1)
    assert CyclicString.from_text("10100", BINARY).canonical().letters == (0, 0, 1, 0, 1)
    assert CyclicString.from_text("0011", BINARY) == CyclicString.from_text("1100", BINARY)
    assert CyclicString.from_text("0011", BINARY) != CyclicString.from_text("0101", BINARY)
    assert len({CyclicString((0, 1, 1)), CyclicString((1, 0, 1))}) == 1


@given(st.lists(st.integers(0, 2), min_size=1, max_size=15))
def test_least_rotation_is_minimal(letters):
    shift = least_rotation(letters)
    rotated = letters[shift:] + letters[:shift]
    assert rotated == min(letters[i:] + letters[:i] for i in range(len(letters)))
