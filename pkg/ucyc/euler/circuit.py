"""Eulerian circuits of transition digraphs and folding them into cyclic strings."""

from __future__ import annotations
from typing import List, Sequence, Tuple, Union
import numpy as np
from ..core import CyclicString, Word
from ..digraph import TransitionDigraph, check_balance, check_connectivity
from .types import Circuit, MalformedCircuitError, NonEulerian


def _hierholzer(g: TransitionDigraph) -> List[int]:
    """Edge indices of an Eulerian circuit starting at vertex 0. Leaves each vertex by
    its least unused edge; subcircuits are spliced in when the walk gets stuck.
    """
    pointer = g.offsets[:-1].tolist()
    ends = g.offsets[1:].tolist()
    targets = g.targets.tolist()
    stack: List[Tuple[int, int]] = [(0, -1)]
    trail: List[int] = []
    while stack:
        v, arrived_by = stack[-1]
        if pointer[v] < ends[v]:
            e = pointer[v]
            pointer[v] += 1
            stack.append((targets[e], e))
        else:
            stack.pop()
            if arrived_by >= 0:
                trail.append(arrived_by)
    trail.reverse()
    return trail


def eulerian_circuit(g: TransitionDigraph) -> Union[Circuit, NonEulerian]:
    """Return an Eulerian circuit of `g`, or the precondition it fails. The circuit
    starts at the least-rank vertex and is fully determined by `g`.
    """
    if g.edge_count == 0:
        return NonEulerian(g.spec, "empty")
    balance = check_balance(g)
    if not balance.balanced:
        return NonEulerian(g.spec, "unbalanced", balance=balance)
    connectivity = check_connectivity(g)
    if not connectivity.weakly_connected:
        return NonEulerian(g.spec, "disconnected", connectivity=connectivity)
    trail = _hierholzer(g)
    return Circuit(g.spec, tuple(g.edges[trail].tolist()))


def fold(circuit: Sequence[Word]) -> CyclicString:
    """Fold a closed sequence of overlapping words into the cyclic string of their
    first letters; its cyclic windows are the words again, in order.
    """
    if not circuit:
        raise ValueError("Cannot fold an empty circuit.")
    for i, word in enumerate(circuit):
        following = circuit[(i + 1) % len(circuit)]
        if word.length != following.length or word.letters[1:] != following.letters[:-1]:
            raise MalformedCircuitError(i)
    return CyclicString(tuple(word.letters[0] for word in circuit))


def fold_ranks(ranks: Sequence[int], n: int, k: int) -> np.ndarray:
    """`fold` on edge ranks, returning the letters as an array."""
    ranks = np.asarray(ranks, dtype=np.int64)
    if len(ranks) == 0:
        raise ValueError("Cannot fold an empty circuit.")
    high = n ** (k - 1)
    broken = np.flatnonzero(ranks % high != np.roll(ranks, -1) // n)
    if len(broken):
        raise MalformedCircuitError(int(broken[0]))
    return ranks // high
