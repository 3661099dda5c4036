"""Vertex degrees as predicted from the vertex word alone, by the counting arguments
behind the existence results. Comparing them with the built digraph checks both.
"""

from __future__ import annotations
from typing import Callable, Dict, Tuple
from ..core import Word
from ..classes import ClassSpec
from ..lattice import endpoint, step_degree
from .digraph import TransitionDigraph

Degrees = Tuple[int, int]


def monotone_degree(n: int, letters: Tuple[int, ...]) -> int:
    """Degree of a vertex of the non-decreasing monotone digraph. With 1-based first
    letter i and last letter j: i + (n - j) + 1 if the vertex is non-decreasing and
    i < j, n if it is constant, and i - j + 1 if it has one internal descent.
    """
    i, j = letters[0] + 1, letters[-1] + 1
    descents = sum(1 for x, y in zip(letters, letters[1:]) if x > y)
    if descents == 0:
        return i + (n - j) + 1 if i < j else n
    if descents == 1:
        return max(i - j + 1, 0)
    return 0


def _composition_degree(spec: ClassSpec, letters: Tuple[int, ...], lo: int, hi: int) -> int:
    # Number of letters that can be added while every count stays within [lo, hi].
    counts = [0] * spec.n
    for x in letters:
        counts[x] += 1
    res = 0
    for x in range(spec.n):
        counts[x] += 1
        if all(lo <= c <= hi for c in counts):
            res += 1
        counts[x] -= 1
    return res


def _all_words(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:  # pylint: disable=unused-argument
    return spec.n, spec.n


def _injective(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    d = _composition_degree(spec, letters, 0, 1)
    return d, d


def _onto(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    d = _composition_degree(spec, letters, 1, spec.k)
    return d, d


def _equitable(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    d = _composition_degree(spec, letters, spec.k // spec.n, -(-spec.k // spec.n))
    return d, d


def _augmented_onto(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    d = _composition_degree(spec, letters, spec.a, spec.b)  # type: ignore
    return d, d


def _monotone(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    if spec.decreasing:
        letters = tuple(spec.n - 1 - x for x in letters)
    d = monotone_degree(spec.n, letters)
    return d, d


def _lipschitz(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:  # pylint: disable=unused-argument
    if spec.is_degenerate_lipschitz:
        return spec.n, spec.n
    return 2 * spec.c + 1, 2 * spec.c + 1  # type: ignore


def _cyclic_categories(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    alphabet = spec.alphabet
    c = alphabet.category_count
    sizes = [len(category) for category in alphabet.categories]  # type: ignore
    first, last = alphabet.category_of(letters[0]), alphabet.category_of(letters[-1])
    return sizes[(first - 1) % c], sizes[(last + 1) % c]


def _lattice(spec: ClassSpec, letters: Tuple[int, ...]) -> Degrees:
    d = step_degree(endpoint(Word(letters), spec.steps), spec.radius)  # type: ignore
    return d, d


PREDICTORS: Dict[str, Callable[[ClassSpec, Tuple[int, ...]], Degrees]] = {
    "all-words": _all_words,
    "injective": _injective,
    "onto": _onto,
    "near-balanced": _equitable,
    "equitable": _equitable,
    "monotone": _monotone,
    "lipschitz": _lipschitz,
    "cyclic-categories": _cyclic_categories,
    "augmented-onto": _augmented_onto,
    "lattice": _lattice,
}


def predicted_degrees(spec: ClassSpec, vertex: Word) -> Degrees:
    """(in-degree, out-degree) of a (k-1)-letter vertex word of the class digraph."""
    if vertex.length != spec.k - 1:
        raise ValueError(
            f"Vertices of this class have {spec.k - 1} letters, not {vertex.length}."
        )
    vertex.check(spec.alphabet)
    return PREDICTORS[spec.kind](spec, vertex.letters)


def predicted_degree_mismatches(g: TransitionDigraph) -> int:
    """Number of vertices whose built degrees differ from the predicted ones."""
    res = 0
    for i in range(g.vertex_count):
        built = (int(g.in_degree[i]), int(g.out_degree[i]))
        if built != predicted_degrees(g.spec, g.vertex_word(i)):
            res += 1
    return res
