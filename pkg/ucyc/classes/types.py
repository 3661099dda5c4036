"""Class-related types, exceptions and warnings."""

from __future__ import annotations
from typing import Literal, NamedTuple, Optional, TYPE_CHECKING
from frozendict import frozendict

if TYPE_CHECKING:
    from .spec import ClassSpec

ClaimStatus = Literal["exists", "not-exists", "unstated"]


class ExistenceClaim(NamedTuple):
    """What the known existence results say about a class: a U-cycle exists, it does
    not exist, or the parameters fall outside every stated range.
    """

    status: ClaimStatus
    basis: Optional[str] = None
    """Short description of the result the claim rests on."""

    def agrees_with(self, exists: bool) -> Optional[bool]:
        """Compare with a computed fact; `None` if nothing is claimed."""
        if self.status == "unstated":
            return None
        return (self.status == "exists") == exists


UNSTATED = ExistenceClaim("unstated")


def claimed_exists(basis: str) -> ExistenceClaim:
    return ExistenceClaim("exists", basis)


def claimed_not_exists(basis: str) -> ExistenceClaim:
    return ExistenceClaim("not-exists", basis)


class ClassSummary(NamedTuple):
    """A class together with its member count and its existence claim."""

    spec: ClassSpec
    count: int
    existence_claim: ExistenceClaim

    def to_dict(self) -> frozendict:
        return frozendict(
            **self.spec.to_dict(),
            count=self.count,
            claimed=self.existence_claim.status,
            basis=self.existence_claim.basis,
        )

    def __str__(self) -> str:
        claim = self.existence_claim
        res = f"{self.spec}: {self.count} words"
        if claim.status == "exists":
            res += f"; a U-cycle is claimed to exist ({claim.basis})"
        elif claim.status == "not-exists":
            res += f"; a U-cycle is claimed not to exist ({claim.basis})"
        return res

    def p(self) -> None:
        """Convenience method to print the summary."""
        print(str(self))


class InvalidSpecError(ValueError):
    def __init__(self, reason: str, *args, **kwargs):
        super().__init__(f"Invalid class specification: {reason}", *args, **kwargs)


class WordMismatchError(ValueError):
    def __init__(self, length: int, expected: int, *args, **kwargs):
        msg = f"Word of length {length} given where length {expected} is expected."
        super().__init__(msg, *args, **kwargs)


class BudgetExceededError(ValueError):
    def __init__(self, required: int, budget: int, *args, **kwargs):
        msg = (
            f"Enumeration needs {required} candidate filterings but the budget is "
            f"{budget}. Raise it with --budget or the UCYC_BUDGET environment variable."
        )
        super().__init__(msg, *args, **kwargs)
        self.required = required
        self.budget = budget


class DegenerateClassWarning(UserWarning):
    """A class whose parameters make it coincide with a simpler class."""
