"""Lattice types."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Literal, Tuple

Stratum = Literal["interior", "face", "edge", "corner", "outside"]
"""Where a point lies relative to the cross-polytope of a given radius."""


@dataclass(frozen=True)
class LatticePoint:
    """A point of the m-dimensional integer lattice."""

    coordinates: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coordinates", tuple(int(c) for c in self.coordinates))
        if len(self.coordinates) < 2:
            raise ValueError("Lattice points need at least 2 coordinates.")

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


class WrongDimensionError(ValueError):
    def __init__(self, expected: int, actual: int, *args, **kwargs):
        msg = f"Expected a {expected}-dimensional point but got dimension {actual}."
        super().__init__(msg, *args, **kwargs)
