"""Digraph report types and exceptions."""

from __future__ import annotations
from typing import NamedTuple, Optional, Tuple
from frozendict import frozendict
from ..core import Word


class DegreeWitness(NamedTuple):
    """A vertex whose in-degree and out-degree differ."""

    vertex: Word
    in_degree: int
    out_degree: int


class BalanceReport(NamedTuple):
    """Whether every vertex has equal in-degree and out-degree."""

    balanced: bool
    degree_histogram: frozendict
    """Number of vertices per (in-degree, out-degree) pair."""
    witness: Optional[DegreeWitness] = None
    """The least-rank unbalanced vertex, `None` iff balanced."""

    def to_dict(self) -> dict:
        res = {
            "balanced": self.balanced,
            "degree_histogram": {
                f"{i},{o}": c for (i, o), c in sorted(self.degree_histogram.items())
            },
        }
        if self.witness is not None:
            res["witness"] = {
                "vertex": list(self.witness.vertex.letters),
                "in_degree": self.witness.in_degree,
                "out_degree": self.witness.out_degree,
            }
        return res

    def __str__(self) -> str:
        degrees = ", ".join(
            f"({i},{o}): {c}" for (i, o), c in sorted(self.degree_histogram.items())
        )
        if self.balanced:
            return f"Balanced; vertices per (in, out) degree: {degrees}"
        w = self.witness
        return (
            f"Unbalanced, e.g. at {w.vertex.letters} with in-degree {w.in_degree} "  # type: ignore
            f"and out-degree {w.out_degree}; vertices per (in, out) degree: {degrees}"  # type: ignore
        )

    def p(self) -> None:
        """Convenience method to print the report."""
        print(str(self))


class ConnectivityReport(NamedTuple):
    """Weak components of a digraph, ordered by their least vertex."""

    weakly_connected: bool
    component_count: int
    component_sizes: Tuple[int, ...]
    sample_vertices: Tuple[Word, ...]
    """The least-rank vertex of each component."""

    def to_dict(self) -> dict:
        return {
            "weakly_connected": self.weakly_connected,
            "component_count": self.component_count,
            "component_sizes": list(self.component_sizes),
            "sample_vertices": [list(v.letters) for v in self.sample_vertices],
        }

    def __str__(self) -> str:
        if self.weakly_connected:
            return "Weakly connected"
        return (
            f"{self.component_count} weak components of sizes "
            f"{', '.join(str(s) for s in self.component_sizes)}"
        )

    def p(self) -> None:
        """Convenience method to print the report."""
        print(str(self))


class WordTooShortError(ValueError):
    def __init__(self, word_length: int, *args, **kwargs):
        msg = (
            f"Transition digraphs need words of length at least 2, not {word_length}."
        )
        super().__init__(msg, *args, **kwargs)


class UnknownVertexError(ValueError):
    def __init__(self, vertex: Word, *args, **kwargs):
        super().__init__(f"{vertex.letters} is not a vertex of this digraph.", *args, **kwargs)
