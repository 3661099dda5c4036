"""TransitionDigraph class."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, Tuple
import numpy as np
from ..core import Word, rank, unrank
from ..classes import ClassSpec, enumerate_ranks
from .types import UnknownVertexError, WordTooShortError


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TransitionDigraph:
    """The transition digraph of a class: vertices are the (k-1)-windows of member
    words, and every member word is an edge from its prefix to its suffix.

    Vertices are stored by rank in increasing order and referred to by their position
    in `vertices`. Edges are stored in rank order, which groups them by source vertex;
    `offsets[v]:offsets[v+1]` is the slice of edges leaving vertex `v`. All arrays are
    read-only.
    """

    spec: ClassSpec
    vertices: np.ndarray
    """Ranks of the (k-1)-letter vertex words, increasing."""

    edges: np.ndarray
    """Ranks of the member words, increasing."""

    sources: np.ndarray
    """Vertex index of each edge's prefix."""

    targets: np.ndarray
    """Vertex index of each edge's suffix."""

    offsets: np.ndarray
    in_degree: np.ndarray
    out_degree: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertex_length(self) -> int:
        return self.spec.k - 1

    def index_of(self, vertex: Word) -> int:
        """Position of a vertex word in `vertices`."""
        if vertex.length != self.vertex_length:
            raise UnknownVertexError(vertex)
        r = rank(vertex, self.spec.alphabet)
        i = int(np.searchsorted(self.vertices, r))
        if i == self.vertex_count or self.vertices[i] != r:
            raise UnknownVertexError(vertex)
        return i

    def vertex_word(self, i: int) -> Word:
        return unrank(int(self.vertices[i]), self.vertex_length, self.spec.alphabet)

    def out_edges(self, i: int) -> np.ndarray:
        """Ranks of the edges leaving vertex `i`, increasing."""
        return self.edges[self.offsets[i] : self.offsets[i + 1]]

    def successors(self, i: int) -> np.ndarray:
        return self.targets[self.offsets[i] : self.offsets[i + 1]]

    def degree(self, vertex: Word) -> Tuple[int, int]:
        """(in-degree, out-degree) of a vertex word."""
        i = self.index_of(vertex)
        return int(self.in_degree[i]), int(self.out_degree[i])

    def __str__(self) -> str:
        return (
            f"Transition digraph of {self.spec}: {self.vertex_count} vertices, "
            f"{self.edge_count} edges"
        )

    def p(self) -> None:
        """Convenience method to print a summary and the adjacency lists."""
        print(str(self))
        alphabet = self.spec.alphabet
        for i in range(self.vertex_count):
            successors = ", ".join(
                self.vertex_word(j).to_text(alphabet) for j in self.successors(i)
            )
            print(f"  {self.vertex_word(i).to_text(alphabet)} -> {successors}")


def build(spec: ClassSpec, budget: Optional[int] = None) -> TransitionDigraph:
    """Build the transition digraph of `spec` from its enumerated member words."""
    if spec.k < 2:
        raise WordTooShortError(spec.k)
    n, k = spec.n, spec.k
    edges = enumerate_ranks(spec, budget)
    prefixes = edges // n
    suffixes = edges % n ** (k - 1)
    vertices = np.union1d(prefixes, suffixes).astype(np.int64)
    sources = np.searchsorted(vertices, prefixes)
    targets = np.searchsorted(vertices, suffixes)
    out_degree = np.bincount(sources, minlength=len(vertices))
    in_degree = np.bincount(targets, minlength=len(vertices))
    offsets = np.concatenate(([0], np.cumsum(out_degree))).astype(np.int64)
    return TransitionDigraph(
        spec=spec,
        vertices=_frozen(vertices),
        edges=edges,
        sources=_frozen(sources),
        targets=_frozen(targets),
        offsets=_frozen(offsets),
        in_degree=_frozen(in_degree),
        out_degree=_frozen(out_degree),
    )
