"""Membership predicates, one per class kind, on single words.

Each `is_*` function takes a `ClassSpec` and a tuple of letter indices of the spec's
word length. These are the reference definitions; `ucyc.classes.masks` holds the
vectorized versions used for enumeration, which must agree with these.
"""

from __future__ import annotations
from typing import List, Sequence, TYPE_CHECKING
from ..core import Word, letter_distance
from ..lattice import endpoint, l1_norm

if TYPE_CHECKING:
    from .spec import ClassSpec

Letters = Sequence[int]


def cyclic_descents(word: Word) -> int:
    """Number of positions i, including the wrap from the last letter to the first,
    with letter i > letter i+1.
    """
    letters = word.letters
    return sum(1 for i, x in enumerate(letters) if x > letters[(i + 1) % len(letters)])


def letter_counts(spec: ClassSpec, letters: Letters) -> List[int]:
    counts = [0] * spec.n
    for x in letters:
        counts[x] += 1
    return counts


def is_all_words(spec: ClassSpec, letters: Letters) -> bool:  # pylint: disable=unused-argument
    return True


def is_injective(spec: ClassSpec, letters: Letters) -> bool:
    """No letter repeats."""
    return max(letter_counts(spec, letters)) <= 1


def is_onto(spec: ClassSpec, letters: Letters) -> bool:
    """Every letter of the alphabet occurs."""
    return min(letter_counts(spec, letters)) >= 1


def is_equitable(spec: ClassSpec, letters: Letters) -> bool:
    """Every letter occurs floor(k/n) or ceil(k/n) times."""
    lo, hi = spec.k // spec.n, -(-spec.k // spec.n)
    return all(x in (lo, hi) for x in letter_counts(spec, letters))


def is_near_balanced(spec: ClassSpec, letters: Letters) -> bool:
    """Binary words with ceil(k/2) of one letter and floor(k/2) of the other."""
    return is_equitable(spec, letters)


def is_monotone(spec: ClassSpec, letters: Letters) -> bool:
    """Some rotation of the word is non-decreasing (non-increasing if the spec says
    `decreasing`).
    """
    k = len(letters)
    for r in range(k):
        rotated = list(letters[r:]) + list(letters[:r])
        pairs = zip(rotated, rotated[1:])
        if spec.decreasing:
            if all(x >= y for x, y in pairs):
                return True
        elif all(x <= y for x, y in pairs):
            return True
    return False


def is_lipschitz(spec: ClassSpec, letters: Letters) -> bool:
    """Consecutive letters are within distance c; the last and first letter are not
    compared.
    """
    return all(
        letter_distance(spec.alphabet, x, y) <= spec.c  # type: ignore
        for x, y in zip(letters, letters[1:])
    )


def is_cyclic_categories(spec: ClassSpec, letters: Letters) -> bool:
    """Each letter's category is the cyclic successor of the previous letter's; the
    first letter's category is free.
    """
    c = spec.alphabet.category_count
    cats = [spec.alphabet.category_of(x) for x in letters]
    return all((y - x) % c == 1 % c for x, y in zip(cats, cats[1:]))


def is_augmented_onto(spec: ClassSpec, letters: Letters) -> bool:
    """Every letter occurs at least a and at most b times."""
    return all(spec.a <= x <= spec.b for x in letter_counts(spec, letters))  # type: ignore


def is_lattice_path(spec: ClassSpec, letters: Letters) -> bool:
    """The path from the origin ends within l1 distance `radius`."""
    return l1_norm(endpoint(Word(tuple(letters)), spec.steps)) <= spec.radius  # type: ignore
