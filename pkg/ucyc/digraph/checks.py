"""Balance, connectivity and reachability checks on transition digraphs."""

from __future__ import annotations
from collections import Counter, deque
from typing import Callable, Sequence, Union
import numpy as np
from frozendict import frozendict
from ..core import Word, rank
from .digraph import TransitionDigraph
from .types import BalanceReport, ConnectivityReport, DegreeWitness, UnknownVertexError
from .unionfind import UnionFind

VertexPredicate = Callable[[Word], bool]


def check_balance(g: TransitionDigraph) -> BalanceReport:
    """Compare in-degree and out-degree at every vertex."""
    histogram = frozendict(
        Counter(zip(g.in_degree.tolist(), g.out_degree.tolist()))
    )
    unbalanced = np.flatnonzero(g.in_degree != g.out_degree)
    if len(unbalanced) == 0:
        return BalanceReport(True, histogram)
    i = int(unbalanced[0])
    witness = DegreeWitness(
        g.vertex_word(i), int(g.in_degree[i]), int(g.out_degree[i])
    )
    return BalanceReport(False, histogram, witness)


def check_connectivity(g: TransitionDigraph) -> ConnectivityReport:
    """Weak components of `g`, i.e. of the underlying undirected graph. Components are
    ordered by their least vertex.
    """
    uf = UnionFind(g.vertex_count)
    for s, t in zip(g.sources.tolist(), g.targets.tolist()):
        uf.union(s, t)
    components = uf.components()
    return ConnectivityReport(
        weakly_connected=len(components) == 1,
        component_count=len(components),
        component_sizes=tuple(len(c) for c in components),
        sample_vertices=tuple(g.vertex_word(c[0]) for c in components),
    )


def _predicate_mask(
    g: TransitionDigraph, predicate: Union[VertexPredicate, np.ndarray]
) -> np.ndarray:
    if callable(predicate):
        return np.array(
            [bool(predicate(g.vertex_word(i))) for i in range(g.vertex_count)],
            dtype=bool,
        )
    mask = np.asarray(predicate, dtype=bool)
    if mask.shape != (g.vertex_count,):
        raise ValueError("A predicate mask needs one entry per vertex.")
    return mask


def reaching_set(
    g: TransitionDigraph, predicate: Union[VertexPredicate, np.ndarray]
) -> np.ndarray:
    """Boolean array marking every vertex from which a directed path (possibly of
    length 0) leads to a vertex satisfying `predicate`. The predicate is either a
    function on vertex words or a boolean array over vertex indices.
    """
    reached = _predicate_mask(g, predicate)
    while True:
        grown = reached.copy()
        grown[g.sources[reached[g.targets]]] = True
        if np.array_equal(grown, reached):
            return reached
        reached = grown


def reaches(g: TransitionDigraph, start: Word, predicate: VertexPredicate) -> bool:
    """Whether a vertex satisfying `predicate` is reachable from `start` by a directed
    path of length 0 or more.
    """
    first = g.index_of(start)
    seen = {first}
    queue = deque([first])
    while queue:
        i = queue.popleft()
        if predicate(g.vertex_word(i)):
            return True
        for j in g.successors(i).tolist():
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return False


def follows_edges(g: TransitionDigraph, walk: Sequence[Word]) -> bool:
    """Whether consecutive vertex words of `walk` are joined by edges of `g`."""
    try:
        for vertex in walk:
            g.index_of(vertex)
    except UnknownVertexError:
        return False
    for u, v in zip(walk, walk[1:]):
        if u.letters[1:] != v.letters[:-1]:
            return False
        r = rank(Word(u.letters + v.letters[-1:]), g.spec.alphabet)
        i = int(np.searchsorted(g.edges, r))
        if i == g.edge_count or g.edges[i] != r:
            return False
    return True
