"""Words, cyclic strings, ranking and cyclic windows."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple
import numpy as np
from .alphabet import OrderedAlphabet
from .types import RankOutOfRangeError, WindowLengthError

MAX_RANK_SPACE = 2**62
"""Ranks are held in int64 arrays; n^k must stay below this bound."""


@dataclass(frozen=True)
class Word:
    """A fixed-length sequence of letter indices. The alphabet is not part of the word;
    functions that need it take it as a separate argument.
    """

    letters: Tuple[int, ...]
    """0-based letter indices."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if not self.letters:
            raise ValueError("A word needs at least one letter.")

    @classmethod
    def from_text(cls, text: str, alphabet: OrderedAlphabet) -> Word:
        """Parse a word from its token string, see `OrderedAlphabet.parse`."""
        return cls(alphabet.parse(text))

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def prefix(self) -> Word:
        """The word without its last letter."""
        return Word(self.letters[:-1])

    def suffix(self) -> Word:
        """The word without its first letter."""
        return Word(self.letters[1:])

    def check(self, alphabet: OrderedAlphabet) -> None:
        """Raise `SymbolIndexError` if a letter is not in `alphabet`."""
        for i in self.letters:
            alphabet.check_index(i)

    def to_text(self, alphabet: OrderedAlphabet) -> str:
        return alphabet.format(self.letters)


def least_rotation(letters: Sequence[int]) -> int:
    """Return the number of left rotations that produce the lexicographically least
    rotation of `letters` (Booth's failure-function scan over the doubled sequence).
    """
    doubled = list(letters) + list(letters)
    failure = [-1] * len(doubled)
    k = 0
    for j in range(1, len(doubled)):
        sj = doubled[j]
        i = failure[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k


@dataclass(frozen=True, eq=False)
class CyclicString:
    """A string read cyclically. Rotations of the same letters denote the same cycle,
    so equality and hashing go through the canonical (lexicographically least)
    rotation.
    """

    letters: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if not self.letters:
            raise ValueError("A cyclic string needs at least one letter.")

    @classmethod
    def from_text(cls, text: str, alphabet: OrderedAlphabet) -> CyclicString:
        return cls(alphabet.parse(text))

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def rotate(self, r: int) -> CyclicString:
        """Rotate left by `r` positions."""
        r %= self.length
        return CyclicString(self.letters[r:] + self.letters[:r])

    def canonical(self) -> CyclicString:
        """Return the lexicographically least rotation."""
        return self.rotate(least_rotation(self.letters))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicString):
            return NotImplemented
        return self.canonical().letters == other.canonical().letters

    def __hash__(self) -> int:
        return hash(self.canonical().letters)

    def to_text(self, alphabet: OrderedAlphabet) -> str:
        return alphabet.format(self.letters)


# ----- Ranking -----


def rank(word: Word, alphabet: OrderedAlphabet) -> int:
    """Big-endian mixed-radix rank of `word`: the first letter is most significant."""
    word.check(alphabet)
    res = 0
    for letter in word.letters:
        res = res * alphabet.size + letter
    return res


def unrank(r: int, k: int, alphabet: OrderedAlphabet) -> Word:
    """Inverse of `rank` for words of length `k`."""
    n = alphabet.size
    if k < 1:
        raise ValueError("Words need at least one letter.")
    if not 0 <= r < n**k:
        raise RankOutOfRangeError(r, n, k)
    letters = [0] * k
    for i in range(k - 1, -1, -1):
        r, letters[i] = divmod(r, n)
    return Word(tuple(letters))


def cyclic_windows(cycle: CyclicString, k: int) -> List[Word]:
    """Return the L windows of length `k` of `cycle`, the i-th starting at position i
    and wrapping around.
    """
    length = cycle.length
    if k < 1:
        raise ValueError("Window length must be positive.")
    if k > length:
        raise WindowLengthError(k, length)
    doubled = cycle.letters + cycle.letters[: k - 1]
    return [Word(doubled[i : i + k]) for i in range(length)]


# ----- Rank arithmetic on arrays -----


def check_rank_space(n: int, k: int) -> None:
    """Make sure ranks of length-`k` words over `n` letters fit into int64 arrays."""
    if n**k >= MAX_RANK_SPACE:
        raise OverflowError(
            f"{n}^{k} words do not fit the int64 rank arithmetic used for arrays."
        )


def rank_powers(n: int, k: int) -> np.ndarray:
    """Positional weights n^(k-1), ..., n, 1 of a length-`k` word."""
    return n ** np.arange(k - 1, -1, -1, dtype=np.int64)


def digits_of(ranks: np.ndarray, n: int, k: int) -> np.ndarray:
    """Unrank an array of ranks into a (len(ranks), k) array of letters."""
    check_rank_space(n, k)
    ranks = np.asarray(ranks, dtype=np.int64)
    return (ranks[:, None] // rank_powers(n, k)[None, :]) % n


def ranks_of(digits: np.ndarray, n: int) -> np.ndarray:
    """Rank every row of a 2D array of letters."""
    digits = np.asarray(digits, dtype=np.int64)
    check_rank_space(n, digits.shape[1])
    return digits @ rank_powers(n, digits.shape[1])


def window_digits(letters: Iterable[int], k: int) -> np.ndarray:
    """Return the (L, k) array of all cyclic windows of `letters`; windows may wrap
    around more than once if `k` exceeds L.
    """
    arr = np.asarray(list(letters), dtype=np.int64)
    positions = np.arange(len(arr))[:, None] + np.arange(k)[None, :]
    return arr[positions % len(arr)]
