"""End-to-end U-cycle generation."""

from __future__ import annotations
from typing import Optional, Union
from ..core import CyclicString
from ..classes import ClassSpec
from ..digraph import build
from .circuit import eulerian_circuit, fold_ranks
from .types import NonEulerian, UCycleReport


def generate(
    spec: ClassSpec, budget: Optional[int] = None, canonical: bool = True
) -> Union[UCycleReport, NonEulerian]:
    """Build the transition digraph of `spec`, extract an Eulerian circuit and fold it
    into a U-cycle.

    - `budget`: maximum number of candidate words to filter, see
      `ucyc.classes.classes.get_budget`.
    - `canonical`: rotate the cycle to its lexicographically least rotation. The
      construction trace always keeps the raw traversal order.
    """
    outcome = eulerian_circuit(build(spec, budget))
    if isinstance(outcome, NonEulerian):
        return outcome
    cycle = CyclicString(tuple(fold_ranks(outcome.edges, spec.n, spec.k).tolist()))
    if canonical:
        cycle = cycle.canonical()
    return UCycleReport(spec, cycle, canonical, outcome.edges)
