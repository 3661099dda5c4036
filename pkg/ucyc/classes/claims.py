"""Known existence results per class kind.

Each claim function maps a spec into the parameter ranges of the known results. The
negative halves are only stated for n >= 2 and k >= 3: with two letters and k = 2 the
cycle "01" covers "01" and "10", so the classes that reduce to those two words do have
a U-cycle there.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
from .types import ExistenceClaim, UNSTATED, claimed_exists, claimed_not_exists

if TYPE_CHECKING:
    from .spec import ClassSpec


def _negative_half_applies(spec: ClassSpec) -> bool:
    return spec.n >= 2 and spec.k >= 3


def all_words_claim(spec: ClassSpec) -> ExistenceClaim:  # pylint: disable=unused-argument
    return claimed_exists("de Bruijn cycles, all k and n")


def injective_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.k < spec.n:
        return claimed_exists("injective words, k < n")
    if spec.k > spec.n:
        return claimed_not_exists("injective words, no words for k > n")
    if _negative_half_applies(spec):
        return claimed_not_exists("injective words, not for k = n")
    return UNSTATED


def onto_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.k > spec.n:
        return claimed_exists("onto words, k > n")
    if spec.k < spec.n:
        return claimed_not_exists("onto words, no words for k < n")
    if _negative_half_applies(spec):
        return claimed_not_exists("onto words, not for k = n")
    return UNSTATED


def near_balanced_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.k % 2 == 1:
        return claimed_exists("near-balanced binary words, odd k")
    if _negative_half_applies(spec):
        return claimed_not_exists("balanced binary words, not for even k")
    return UNSTATED


def equitable_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.k % spec.n != 0:
        return claimed_exists("equitable words, iff k is not a multiple of n")
    if _negative_half_applies(spec):
        return claimed_not_exists("equitable words, iff k is not a multiple of n")
    return UNSTATED


def monotone_claim(spec: ClassSpec) -> ExistenceClaim:  # pylint: disable=unused-argument
    return claimed_exists("monotone words, all k and n")


def lipschitz_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.is_degenerate_lipschitz:
        return claimed_exists("2c+1 > n admits all words, de Bruijn cycles")
    return claimed_exists("Lipschitz words, all k and n")


def cyclic_categories_claim(spec: ClassSpec) -> ExistenceClaim:
    c = spec.alphabet.category_count
    if c == 1:
        return claimed_exists("a single category admits all words, de Bruijn cycles")
    if c == 2:
        sizes = {len(category) for category in spec.alphabet.categories}  # type: ignore
        if spec.k % 2 == 0:
            return claimed_exists("alternating words, k even")
        if len(sizes) == 1:
            return claimed_exists("alternating words, k odd with equal categories")
        return UNSTATED
    if spec.k >= c + 2 and (spec.k - 2) % c == 0:
        return claimed_exists("cyclic-category words, k = ac+2")
    return UNSTATED


def augmented_onto_claim(spec: ClassSpec) -> ExistenceClaim:
    """The range bounds the word length by the alphabet size: n+1 <= k <= 2n-1 for
    (1, 2). Read with n and k swapped, as k+1 <= n <= 2k-1, it would select words
    shorter than the alphabet, which miss a letter, so the class would be empty.
    """
    a, b = spec.a, spec.b
    if a * spec.n + 1 <= spec.k <= b * spec.n - 1:  # type: ignore
        if (a, b) == (1, 2):
            return claimed_exists("augmented onto words (1, 2), n+1 <= k <= 2n-1")
        return claimed_exists("augmented onto words, an+1 <= k <= bn-1")
    if _negative_half_applies(spec):
        # Outside the range every member uses each letter equally often, or there
        # are no members at all.
        return claimed_not_exists("augmented onto words, only an+1 <= k <= bn-1")
    return UNSTATED


def lattice_claim(spec: ClassSpec) -> ExistenceClaim:
    if spec.k <= spec.radius:  # type: ignore
        return claimed_exists("path length <= radius admits all words, de Bruijn cycles")
    if spec.dimension == 3 and spec.k >= spec.radius + 1 >= 4:  # type: ignore
        return claimed_exists("3D lattice paths, k >= radius+1 >= 4")
    return UNSTATED
