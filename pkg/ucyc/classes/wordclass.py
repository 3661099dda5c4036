"""WordClass class and related functions."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Generator
from .classtype import ClassKind


@dataclass(frozen=True)
class WordClass:
    """A `WordClass` encapsulates everything the library knows about one class kind."""

    name: ClassKind

    description: str
    """One-line description, shown by `ucyc list --classes`."""

    is_member: Callable
    """Membership of one word: `(spec, letters) -> bool`."""

    member_mask: Callable
    """Vectorized membership: `(spec, digits) -> boolean array`."""

    existence_claim: Callable
    """The known existence result: `spec -> ExistenceClaim`."""


def get_word_class(name: ClassKind) -> WordClass:
    """Get a specific word class."""
    # Prevent circular dependencies -- pylint: disable=import-outside-toplevel
    from .classes_directory import CLASS_DIRECTORY

    try:
        return CLASS_DIRECTORY[name]
    except KeyError as exc:
        raise ValueError(
            f"Unknown class '{name}'. Supported classes are: "
            f"{', '.join(CLASS_DIRECTORY.keys())}"
        ) from exc


def get_all_word_classes() -> Generator[WordClass, None, None]:
    """Get all the known word classes."""
    # Prevent circular dependencies -- pylint: disable=import-outside-toplevel
    from .classes_directory import CLASS_DIRECTORY

    yield from CLASS_DIRECTORY.values()
