"""Verification report types."""

from __future__ import annotations
from typing import Literal, NamedTuple, Optional, Tuple
from ..core import Word

FailureKind = Literal["invalid", "duplicate", "missing"]


class Failure(NamedTuple):
    """One problem found in a candidate U-cycle."""

    position: Optional[int]
    """Start of the offending window; `None` for class words missing from the cycle."""
    window: Word
    kind: FailureKind


class VerificationReport(NamedTuple):
    """Outcome of checking a cyclic string against a class."""

    ok: bool
    length_ok: bool
    """The cycle has exactly one letter per class word."""
    all_windows_valid: bool
    all_distinct: bool
    coverage_complete: bool
    """Every class word occurs as a window."""
    length: int
    expected_length: int
    failures: Tuple[Failure, ...] = ()
    """The first failures found, up to the configured cap."""
    failure_count: int = 0
    """Number of failures found, including those beyond the cap."""

    def to_dict(self, alphabet=None) -> dict:
        """JSON-ready form; windows are rendered with `alphabet` if given."""

        def render(word: Word):
            return word.to_text(alphabet) if alphabet is not None else list(word.letters)

        return {
            "ok": self.ok,
            "length": self.length,
            "expected_length": self.expected_length,
            "length_ok": self.length_ok,
            "all_windows_valid": self.all_windows_valid,
            "all_distinct": self.all_distinct,
            "coverage_complete": self.coverage_complete,
            "failure_count": self.failure_count,
            "failures": [
                {"position": f.position, "window": render(f.window), "kind": f.kind}
                for f in self.failures
            ],
        }

    def __str__(self) -> str:
        if self.ok:
            return f"OK: a U-cycle of length {self.length}"
        problems = [
            text
            for flag, text in (
                (self.length_ok, f"length {self.length} instead of {self.expected_length}"),
                (self.all_windows_valid, "windows outside the class"),
                (self.all_distinct, "repeated windows"),
                (self.coverage_complete, "class words missing"),
            )
            if not flag
        ]
        return f"Not a U-cycle: {'; '.join(problems)} ({self.failure_count} failures)"

    def p(self) -> None:
        """Convenience method to print the report."""
        print(str(self))
