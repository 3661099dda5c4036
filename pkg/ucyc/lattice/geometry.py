"""Step alphabets, endpoints, norms, and boundary strata of lattice-path words."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, Tuple
import numpy as np
from ..core import OrderedAlphabet, Word, InvalidAlphabetError
from .types import LatticePoint, Stratum, WrongDimensionError

NAMED_STEPS = ("N", "S", "E", "W", "U", "D")
"""Step names for up to 3 dimensions: N/S move along y, E/W along x, U/D along z."""

NAMED_AXES = (1, 0, 2)
"""Axis moved along by each pair of `NAMED_STEPS`."""

STRATUM_BY_ZEROS = {2: "corner", 1: "edge", 0: "face"}
"""Boundary strata of the 3D cross-polytope by number of zero coordinates."""


@dataclass(frozen=True)
class StepAlphabet:
    """An alphabet of 2m symbols read as unit steps. Letters 2i and 2i+1 are the
    positive and negative step along axis `axes[i]`.
    """

    alphabet: OrderedAlphabet
    dimension: int
    axes: Optional[Tuple[int, ...]] = None
    """Axis per symbol pair; defaults to the N/S, E/W, U/D convention for up to 3
    dimensions and to pair i moving along axis i beyond that.
    """

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("Lattice paths need a dimension of at least 2.")
        if self.alphabet.size != 2 * self.dimension:
            raise InvalidAlphabetError(
                f"a {self.dimension}-dimensional step alphabet needs "
                f"{2 * self.dimension} symbols, not {self.alphabet.size}"
            )
        axes = self.axes
        if axes is None:
            axes = (
                NAMED_AXES[: self.dimension]
                if self.dimension <= 3
                else tuple(range(self.dimension))
            )
        if sorted(axes) != list(range(self.dimension)):
            raise ValueError("`axes` must be a permutation of the axis indices.")
        object.__setattr__(self, "axes", tuple(axes))

    def unit_step(self, letter: int) -> Tuple[int, int]:
        """Return (axis, sign) of a letter."""
        self.alphabet.check_index(letter)
        pair, negative = divmod(letter, 2)
        return self.axes[pair], -1 if negative else 1  # type: ignore


def lattice_step_alphabet(dimension: int) -> StepAlphabet:
    """The auto-generated step alphabet: N,S,E,W for 2 dimensions, N,S,E,W,U,D for 3,
    and x1+,x1-,x2+,... beyond that.
    """
    if dimension <= 3:
        symbols = NAMED_STEPS[: 2 * dimension]
    else:
        symbols = tuple(
            f"x{axis}{sign}" for axis in range(1, dimension + 1) for sign in "+-"
        )
    return StepAlphabet(OrderedAlphabet(symbols), dimension)


def endpoint(word: Word, steps: StepAlphabet) -> LatticePoint:
    """The point a path ends at when it starts at the origin."""
    coordinates = [0] * steps.dimension
    for letter in word.letters:
        axis, sign = steps.unit_step(letter)
        coordinates[axis] += sign
    return LatticePoint(tuple(coordinates))


def endpoints_of(digits: np.ndarray, steps: StepAlphabet) -> np.ndarray:
    """Vectorized `endpoint` for a (N, k) array of words; returns a (N, m) array."""
    res = np.zeros((digits.shape[0], steps.dimension), dtype=np.int64)
    for pair, axis in enumerate(steps.axes):  # type: ignore
        res[:, axis] = (digits == 2 * pair).sum(axis=1) - (digits == 2 * pair + 1).sum(
            axis=1
        )
    return res


def l1_norm(p: LatticePoint) -> int:
    return sum(abs(c) for c in p.coordinates)


def zero_count(p: LatticePoint) -> int:
    """Number of zero coordinates."""
    return sum(1 for c in p.coordinates if c == 0)


def boundary_stratum(p: LatticePoint, radius: int) -> Stratum:
    """Classify a 3D point against the cross-polytope of all points with l1 norm at
    most `radius`. Boundary points are classified by their number of zero
    coordinates; the origin on a radius-0 polytope counts as a corner.
    """
    if p.dimension != 3:
        raise WrongDimensionError(3, p.dimension)
    norm = l1_norm(p)
    if norm > radius:
        return "outside"
    if norm < radius:
        return "interior"
    return STRATUM_BY_ZEROS[min(zero_count(p), 2)]  # type: ignore


def step_degree(p: LatticePoint, radius: int) -> int:
    """Number of unit steps from `p` that end within l1 distance `radius`."""
    res = 0
    for axis in range(p.dimension):
        for sign in (1, -1):
            moved = list(p.coordinates)
            moved[axis] += sign
            if sum(abs(c) for c in moved) <= radius:
                res += 1
    return res
