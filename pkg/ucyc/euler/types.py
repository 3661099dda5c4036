"""Outcome types of circuit extraction and generation."""

from __future__ import annotations
from typing import List, Literal, NamedTuple, Optional, Tuple
from ..core import CyclicString, Word, unrank
from ..classes import ClassSpec
from ..digraph import BalanceReport, ConnectivityReport

NonEulerianReason = Literal["unbalanced", "disconnected", "empty"]


class Circuit(NamedTuple):
    """A closed trail through every edge of a transition digraph exactly once."""

    spec: ClassSpec
    edges: Tuple[int, ...]
    """Ranks of the traversed edge words, in traversal order."""

    def words(self) -> List[Word]:
        return [unrank(r, self.spec.k, self.spec.alphabet) for r in self.edges]

    def __len__(self) -> int:
        return len(self.edges)


class NonEulerian(NamedTuple):
    """Certificate that a class has no U-cycle: its transition digraph fails one of the
    Eulerian preconditions.
    """

    spec: ClassSpec
    reason: NonEulerianReason
    balance: Optional[BalanceReport] = None
    """Set if the digraph is unbalanced."""
    connectivity: Optional[ConnectivityReport] = None
    """Set if the digraph is balanced but not weakly connected."""

    def to_dict(self) -> dict:
        res = {**self.spec.to_dict(), "reason": self.reason}
        if self.balance is not None:
            res.update(self.balance.to_dict())
        if self.connectivity is not None:
            res.update(self.connectivity.to_dict())
        return res

    def __str__(self) -> str:
        res = f"No U-cycle of {self.spec}: "
        if self.reason == "empty":
            return res + "the class is empty"
        if self.reason == "unbalanced":
            return res + f"the digraph is unbalanced. {self.balance}"
        return res + f"the digraph is disconnected. {self.connectivity}"

    def p(self) -> None:
        """Convenience method to print the certificate."""
        print(str(self))


class UCycleReport(NamedTuple):
    """A U-cycle of a class together with how it was obtained."""

    spec: ClassSpec
    cycle: CyclicString
    canonical: bool
    """Whether `cycle` was rotated to its lexicographically least rotation."""
    construction_trace: Optional[Tuple[int, ...]] = None
    """Edge ranks in the order the circuit traversed them, before any rotation."""

    @property
    def length(self) -> int:
        return self.cycle.length

    def to_text(self) -> str:
        return self.cycle.to_text(self.spec.alphabet)

    def trace_words(self) -> List[str]:
        """The construction trace as token strings; empty without a trace."""
        if self.construction_trace is None:
            return []
        alphabet = self.spec.alphabet
        return [
            unrank(r, self.spec.k, alphabet).to_text(alphabet)
            for r in self.construction_trace
        ]

    def to_dict(self, trace: bool = False) -> dict:
        res = {**self.spec.to_dict(), "length": self.length, "cycle": self.to_text()}
        if trace:
            res["trace"] = self.trace_words()
        return res

    def __str__(self) -> str:
        return f"U-cycle of {self.spec} ({self.length} letters): {self.to_text()}"

    def p(self) -> None:
        """Convenience method to print the report."""
        print(str(self))


class MalformedCircuitError(ValueError):
    def __init__(self, position: int, *args, **kwargs):
        msg = (
            f"Edge {position} of the circuit does not overlap its successor in all "
            "but one letter."
        )
        super().__init__(msg, *args, **kwargs)
        self.position = position
