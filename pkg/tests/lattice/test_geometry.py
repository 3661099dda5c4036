"""Lattice geometry tests."""

# pylint: disable=missing-function-docstring

import numpy as np
import pytest
from ucyc.core import OrderedAlphabet, Word, digits_of, InvalidAlphabetError
from ucyc.lattice import (
    LatticePoint,
    StepAlphabet,
    WrongDimensionError,
    lattice_step_alphabet,
    endpoint,
    endpoints_of,
    l1_norm,
    zero_count,
    boundary_stratum,
    step_degree,
)


def path(text: str, steps: StepAlphabet) -> LatticePoint:
    return endpoint(Word.from_text(text, steps.alphabet), steps)


def test_named_step_alphabets():
    assert lattice_step_alphabet(2).alphabet.symbols == ("N", "S", "E", "W")
    assert lattice_step_alphabet(3).alphabet.symbols == ("N", "S", "E", "W", "U", "D")
    steps = lattice_step_alphabet(2)
    assert steps.unit_step(0) == (1, 1)  # N: +y
    assert steps.unit_step(1) == (1, -1)  # S: -y
    assert steps.unit_step(2) == (0, 1)  # E: +x
    assert steps.unit_step(3) == (0, -1)  # W: -x


def test_generated_step_alphabet():
    steps = lattice_step_alphabet(4)
    assert steps.alphabet.symbols == ("x1+", "x1-", "x2+", "x2-", "x3+", "x3-", "x4+", "x4-")
    assert steps.unit_step(5) == (2, -1)


def test_step_alphabet_size_must_match():
    with pytest.raises(InvalidAlphabetError):
        StepAlphabet(OrderedAlphabet.of_size(5), 2)
    with pytest.raises(ValueError):
        StepAlphabet(OrderedAlphabet.of_size(2), 1)


@pytest.mark.parametrize(
    "dimension, text, expected",
    [(2, "EEN", (2, 1)), (2, "ENE", (2, 1)), (2, "NS", (0, 0)), (3, "UUDNE", (1, 1, 1))],
)
def test_endpoint(dimension, text, expected):
    p = path(text, lattice_step_alphabet(dimension))
    assert p.coordinates == expected
    assert p.dimension == dimension


def test_point_str():
    assert str(path("EEN", lattice_step_alphabet(2))) == "(2, 1)"


@pytest.mark.parametrize(
    "coordinates, expected", [((2, 1), 3), ((0, 0, 0), 0), ((-1, 2, -2), 5)]
)
def test_l1_norm(coordinates, expected):
    assert l1_norm(LatticePoint(coordinates)) == expected


def test_lattice_point_needs_two_coordinates():
    with pytest.raises(ValueError):
        LatticePoint((1,))


@pytest.mark.parametrize(
    "coordinates, radius, expected",
    [
        ((3, 0, 0), 3, "corner"),
        ((0, -2, 0), 2, "corner"),
        ((2, 1, 0), 3, "edge"),
        ((1, 1, 1), 3, "face"),
        ((0, 0, 0), 1, "interior"),
        ((1, 0, 1), 3, "interior"),
        ((2, 2, 0), 3, "outside"),
        ((0, 0, 0), 0, "corner"),
    ],
)
def test_boundary_stratum(coordinates, radius, expected):
    assert boundary_stratum(LatticePoint(coordinates), radius) == expected


def test_boundary_stratum_needs_3d():
    with pytest.raises(WrongDimensionError):
        boundary_stratum(LatticePoint((1, 0)), 1)


def test_zero_count():
    assert zero_count(LatticePoint((0, 3, 0))) == 2
    assert zero_count(LatticePoint((1, 3, -1, 0))) == 1


@pytest.mark.parametrize(
    "coordinates, radius, expected",
    [
        ((0, 0), 1, 4),
        ((1, 0), 1, 1),
        ((3, 0, 0), 3, 1),
        ((2, 1, 0), 3, 2),
        ((1, 1, 1), 3, 3),
        ((1, 0, 0), 3, 6),
        ((2, 2, 0), 3, 2),
        ((0, 0, 0, 0), 2, 8),
    ],
)
def test_step_degree(coordinates, radius, expected):
    assert step_degree(LatticePoint(coordinates), radius) == expected


@pytest.mark.parametrize("dimension, length", [(2, 5), (3, 4), (4, 3)])
def test_endpoints_of_agrees_with_endpoint(dimension, length):
    steps = lattice_step_alphabet(dimension)
    n = 2 * dimension
    digits = digits_of(np.arange(n**length), n, length)
    vectorized = endpoints_of(digits, steps)
    for row, p in zip(digits.tolist(), vectorized.tolist()):
        assert tuple(p) == endpoint(Word(tuple(row)), steps).coordinates


@pytest.mark.parametrize("dimension, length", [(2, 6), (3, 5)])
def test_endpoint_norm_has_the_parity_of_the_length(dimension, length):
    steps = lattice_step_alphabet(dimension)
    n = 2 * dimension
    for k in range(1, length + 1):
        norms = np.abs(endpoints_of(digits_of(np.arange(n**k), n, k), steps)).sum(axis=1)
        assert (norms % 2 == k % 2).all()
