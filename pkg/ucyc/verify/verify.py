"""Checking candidate U-cycles, independently of digraphs and circuits."""

from __future__ import annotations
from typing import List, Optional
import numpy as np
from ..core import CyclicString, Word, digits_of, ranks_of, window_digits
from ..classes import (
    BudgetExceededError,
    ClassSpec,
    CHUNK_SIZE,
    enumerate_ranks,
    get_budget,
    member_mask,
)
from .types import Failure, VerificationReport

FAILURE_CAP = 32
"""Default maximum number of failures listed in a report."""


def verify(
    cycle: CyclicString,
    spec: ClassSpec,
    budget: Optional[int] = None,
    failure_cap: int = FAILURE_CAP,
) -> VerificationReport:
    """Check that the cyclic k-windows of `cycle` are exactly the words of `spec`, each
    once. Windows wrap around as often as needed, so cycles shorter than k are
    checked too.
    """
    n, k = spec.n, spec.k
    members = enumerate_ranks(spec, budget)
    digits = window_digits(cycle.letters, k)
    in_alphabet = ((digits >= 0) & (digits < n)).all(axis=1)
    safe = np.where(in_alphabet[:, None], digits, 0)
    valid = in_alphabet & member_mask(spec, safe)
    ranks = np.where(in_alphabet, ranks_of(safe, n), -1)

    _, first = np.unique(ranks, return_index=True)
    repeated = np.ones(len(ranks), dtype=bool)
    repeated[first] = False
    repeated &= in_alphabet
    missing = np.setdiff1d(members, ranks[valid], assume_unique=False)

    failures: List[Failure] = []
    for i in np.flatnonzero(~valid | repeated).tolist():
        window = Word(tuple(digits[i].tolist()))
        failures.append(Failure(i, window, "invalid" if not valid[i] else "duplicate"))
    for row in digits_of(missing, n, k).tolist():
        failures.append(Failure(None, Word(tuple(row)), "missing"))

    length_ok = cycle.length == len(members)
    all_windows_valid = bool(valid.all())
    all_distinct = not repeated.any()
    coverage_complete = len(missing) == 0
    return VerificationReport(
        ok=length_ok and all_windows_valid and all_distinct and coverage_complete,
        length_ok=length_ok,
        all_windows_valid=all_windows_valid,
        all_distinct=bool(all_distinct),
        coverage_complete=coverage_complete,
        length=cycle.length,
        expected_length=len(members),
        failures=tuple(failures[:failure_cap]),
        failure_count=len(failures),
    )


def exhaustive_nonexistence(spec: ClassSpec, budget: Optional[int] = None) -> bool:
    """Decide by brute force over every string of length count(spec) whether no U-cycle
    of `spec` exists. Raises `BudgetExceededError` if the n^count candidate strings
    exceed the budget.
    """
    n, k = spec.n, spec.k
    members = enumerate_ranks(spec, budget)
    length = len(members)
    if length == 0:
        return True
    candidates = n**length
    resolved = get_budget(budget)
    if candidates > resolved:
        raise BudgetExceededError(candidates, resolved)

    positions = (np.arange(length)[:, None] + np.arange(k)[None, :]) % length
    powers = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    batch = max(1, CHUNK_SIZE // length)
    for start in range(0, candidates, batch):
        strings = digits_of(
            np.arange(start, min(start + batch, candidates), dtype=np.int64), n, length
        )
        window_ranks = strings[:, positions] @ powers
        window_ranks.sort(axis=1)
        if (window_ranks == members[None, :]).all(axis=1).any():
            return False
    return True
