"""Parameter grids for `ucyc sweep`.

A grid maps entry names to class options. Every option is a single value, a list of
values, or an inclusive range `{from: 2, to: 7}`; an entry stands for all combinations
of its options. The `class` option defaults to the entry name.
"""

from __future__ import annotations
from typing import Any, Dict, List, Tuple
import itertools
import yaml
from ..classes import CLASS_KINDS

GRID_OPTIONS = (
    "class",
    "alphabet_size",
    "alphabet",
    "cyclic",
    "categories",
    "honeycomb",
    "decreasing",
    "length",
    "c",
    "a",
    "b",
    "dimension",
    "radius",
)
"""Options a grid entry may set, in the order they vary (last fastest)."""

Grid = Dict[str, Dict[str, Any]]


def _augmented_onto_entries(a: int, b: int, sizes: List[int]) -> Grid:
    return {
        f"augmented-onto-{a}-{b}-n{n}": {
            "class": "augmented-onto",
            "a": a,
            "b": b,
            "alphabet_size": n,
            "length": {"from": a * n + 1, "to": b * n - 1},
        }
        for n in sizes
    }


DEFAULT_GRID: Grid = {
    "monotone": {"alphabet_size": {"from": 2, "to": 5}, "length": {"from": 2, "to": 7}},
    "lipschitz": {
        "alphabet_size": [5, 7],
        "c": [1, 2],
        "length": {"from": 2, "to": 6},
    },
    "alternating-2-2": {
        "class": "cyclic-categories",
        "alphabet_size": 4,
        "categories": "ab|cd",
        "length": [4, 6],
    },
    "alternating-3-3": {
        "class": "cyclic-categories",
        "alphabet_size": 6,
        "categories": "abc|def",
        "length": [4, 6],
    },
    "categories-2-2-2": {
        "class": "cyclic-categories",
        "alphabet_size": 6,
        "categories": "ab|cd|ef",
        "length": [5, 8],
    },
    "honeycomb": {
        "class": "cyclic-categories",
        "honeycomb": True,
        "length": {"from": 2, "to": 5},
    },
    **_augmented_onto_entries(1, 2, [3, 4, 5]),
    **_augmented_onto_entries(2, 3, [2, 3]),
    "lattice-3d-radius-3": {
        "class": "lattice",
        "dimension": 3,
        "radius": 3,
        "length": [4, 5, 6],
    },
    "lattice-3d-radius-4": {"class": "lattice", "dimension": 3, "radius": 4, "length": 5},
    "lattice-2d-radius-1": {"class": "lattice", "dimension": 2, "radius": 1, "length": 3},
    "lattice-2d-radius-2": {"class": "lattice", "dimension": 2, "radius": 2, "length": 4},
    "lattice-2d-radius-3": {
        "class": "lattice",
        "dimension": 2,
        "radius": 3,
        "length": [3, 5],
    },
}
"""The grid swept when no grid file is given: every class with a known existence
result, at sizes that finish in seconds.
"""


def load_grid(grid_file: str) -> Grid:
    """Load a grid from a YAML file."""
    with open(grid_file, "r", encoding="utf-8") as stream:
        ymldict = yaml.safe_load(stream)
    if not isinstance(ymldict, dict):
        raise ValueError(f"Grid file {grid_file} must map entry names to options.")
    return {str(k): dict(v or {}) for k, v in ymldict.items()}


def _values(option: str, value: Any) -> List[Any]:
    if isinstance(value, dict):
        if set(value) != {"from", "to"}:
            raise ValueError(f"Range for '{option}' needs exactly 'from' and 'to'.")
        return list(range(int(value["from"]), int(value["to"]) + 1))
    if isinstance(value, list):
        return value
    return [value]


def expand_entry(name: str, entry: Dict[str, Any]) -> List[Dict[str, Any]]:
    """All parameter combinations of one grid entry."""
    unknown = set(entry) - set(GRID_OPTIONS)
    if unknown:
        raise ValueError(
            f"Unknown options in grid entry '{name}': {', '.join(sorted(unknown))}. "
            f"Known options are: {', '.join(GRID_OPTIONS)}"
        )
    entry = dict(entry)
    if "class" not in entry:
        if name not in CLASS_KINDS:
            raise ValueError(f"Grid entry '{name}' needs a 'class' option.")
        entry["class"] = name
    if "length" not in entry:
        raise ValueError(f"Grid entry '{name}' needs a 'length' option.")
    options = [o for o in GRID_OPTIONS if o in entry]
    return [
        dict(zip(options, combination))
        for combination in itertools.product(*(_values(o, entry[o]) for o in options))
    ]


def grid_points(grid: Grid) -> List[Tuple[str, Dict[str, Any]]]:
    """(entry name, parameters) of every point of the grid, in grid order."""
    return [
        (name, point) for name, entry in grid.items() for point in expand_entry(name, entry)
    ]
