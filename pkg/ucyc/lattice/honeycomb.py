"""Walks on the honeycomb lattice, as words over six signed axis steps."""

from typing import Final
from frozendict import frozendict
from ..core import OrderedAlphabet, Word

HONEYCOMB_SYMBOLS: Final = ("x+", "y+", "z+", "x-", "y-", "z-")

HONEYCOMB_NEXT_STEPS: Final = frozendict(
    {
        "x+": frozenset({"x-", "y-", "z-"}),
        "x-": frozenset({"x+", "y+", "z+"}),
        "y+": frozenset({"x-", "y-", "z-"}),
        "y-": frozenset({"x+", "y+", "z+"}),
        "z+": frozenset({"x-", "y-", "z-"}),
        "z-": frozenset({"x+", "y+", "z+"}),
    }
)
"""Permitted next step after each step of a walk."""


def honeycomb_alphabet() -> OrderedAlphabet:
    """The six steps, categorized into positives and negatives."""
    return OrderedAlphabet(
        HONEYCOMB_SYMBOLS, categories=(frozenset({0, 1, 2}), frozenset({3, 4, 5}))
    )


def is_honeycomb_walk(word: Word) -> bool:
    """Check a word over `honeycomb_alphabet` step by step against the table of
    permitted next steps.
    """
    names = [HONEYCOMB_SYMBOLS[i] for i in word.letters]
    return all(b in HONEYCOMB_NEXT_STEPS[a] for a, b in zip(names, names[1:]))
