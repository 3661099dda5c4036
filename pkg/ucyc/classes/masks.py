"""Vectorized membership: each `*_mask` function takes a `ClassSpec` and an (N, k)
array of letters and returns a boolean array marking the member rows.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
import numpy as np
from ..lattice import endpoints_of

if TYPE_CHECKING:
    from .spec import ClassSpec


def letter_counts(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    """(N, n) array with the number of occurrences of each letter per row."""
    return np.stack([(digits == x).sum(axis=1) for x in range(spec.n)], axis=1)


def all_words_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:  # pylint: disable=unused-argument
    return np.ones(digits.shape[0], dtype=bool)


def injective_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    return letter_counts(spec, digits).max(axis=1) <= 1


def onto_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    return letter_counts(spec, digits).min(axis=1) >= 1


def equitable_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    counts = letter_counts(spec, digits)
    lo, hi = spec.k // spec.n, -(-spec.k // spec.n)
    return ((counts == lo) | (counts == hi)).all(axis=1)


near_balanced_mask = equitable_mask


def monotone_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    """At most one cyclic descent (ascent, if decreasing)."""
    following = np.roll(digits, -1, axis=1)
    breaks = digits < following if spec.decreasing else digits > following
    return breaks.sum(axis=1) <= 1


def lipschitz_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    dist = np.abs(np.diff(digits, axis=1))
    if spec.alphabet.cyclic:
        dist = np.minimum(dist, spec.n - dist)
    return (dist <= spec.c).all(axis=1)


def cyclic_categories_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    c = spec.alphabet.category_count
    cats = np.asarray(spec.alphabet.category_table, dtype=np.int64)[digits]
    return (np.diff(cats, axis=1) % c == 1 % c).all(axis=1)


def augmented_onto_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    counts = letter_counts(spec, digits)
    return ((counts >= spec.a) & (counts <= spec.b)).all(axis=1)


def lattice_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    return np.abs(endpoints_of(digits, spec.steps)).sum(axis=1) <= spec.radius
