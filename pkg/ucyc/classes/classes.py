"""Membership, enumeration, counting and existence claims for a `ClassSpec`."""

from __future__ import annotations
from functools import lru_cache, wraps
from typing import List, Optional
import os
import numpy as np
from ..core import Word, digits_of, check_rank_space
from .spec import ClassSpec
from .types import (
    BudgetExceededError,
    ClassSummary,
    ExistenceClaim,
    UNSTATED,
    WordMismatchError,
)
from .wordclass import get_word_class

DEFAULT_BUDGET = 10**8
"""Maximum number of candidate words filtered by a single enumeration."""

BUDGET_ENV_VAR = "UCYC_BUDGET"
"""Environment variable that overrides `DEFAULT_BUDGET`."""

CHUNK_SIZE = 1 << 18
"""Number of candidate ranks filtered per vectorized batch."""


def custom_cache_wrapper(func):
    """To preserve the function's signature _and_ give access to `cache_clear` etc."""
    cached_func = lru_cache(maxsize=None)(func)
    wrapped_func = wraps(func)(cached_func)
    return wrapped_func


def get_budget(budget: Optional[int] = None) -> int:
    """Resolve the enumeration budget: an explicit value wins over the environment
    variable, which wins over the default.
    """
    if budget is not None:
        return budget
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None or not value.strip():
        return DEFAULT_BUDGET
    try:
        return int(value.replace("_", ""))
    except ValueError as exc:
        raise ValueError(
            f"{BUDGET_ENV_VAR} must be an integer, got {value!r}."
        ) from exc


def check_budget(spec: ClassSpec, budget: Optional[int] = None) -> None:
    """Raise `BudgetExceededError` if enumerating `spec` filters too many candidates."""
    required = spec.n**spec.k
    resolved = get_budget(budget)
    if required > resolved:
        raise BudgetExceededError(required, resolved)


def member_mask(spec: ClassSpec, digits: np.ndarray) -> np.ndarray:
    """Vectorized membership for a (N, k) array of letters."""
    return get_word_class(spec.kind).member_mask(spec, np.asarray(digits, dtype=np.int64))


@custom_cache_wrapper
def _filtered_ranks(spec: ClassSpec) -> np.ndarray:
    check_rank_space(spec.n, spec.k)
    total = spec.n**spec.k
    parts = []
    for start in range(0, total, CHUNK_SIZE):
        ranks = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
        parts.append(ranks[member_mask(spec, digits_of(ranks, spec.n, spec.k))])
    res = np.concatenate(parts)
    res.setflags(write=False)
    return res


def enumerate_ranks(spec: ClassSpec, budget: Optional[int] = None) -> np.ndarray:
    """Return the ranks of all member words in increasing order, as a read-only int64
    array. Results are cached per spec.
    """
    check_budget(spec, budget)
    return _filtered_ranks(spec)


def enumerate_words(spec: ClassSpec, budget: Optional[int] = None) -> List[Word]:
    """All member words in rank order."""
    ranks = enumerate_ranks(spec, budget)
    return [Word(tuple(row)) for row in digits_of(ranks, spec.n, spec.k).tolist()]


def count(spec: ClassSpec, budget: Optional[int] = None) -> int:
    """Number of member words."""
    return len(enumerate_ranks(spec, budget))


def is_member(spec: ClassSpec, word: Word) -> bool:
    """Check a single word against the class definition."""
    if word.length != spec.k:
        raise WordMismatchError(word.length, spec.k)
    word.check(spec.alphabet)
    return get_word_class(spec.kind).is_member(spec, word.letters)


def existence_claim(spec: ClassSpec) -> ExistenceClaim:
    """What the known results say about a U-cycle of this class. Words of length 1 are
    outside every result.
    """
    if spec.k < 2:
        return UNSTATED
    return get_word_class(spec.kind).existence_claim(spec)


def summarize(spec: ClassSpec, budget: Optional[int] = None) -> ClassSummary:
    return ClassSummary(spec, count(spec, budget), existence_claim(spec))
