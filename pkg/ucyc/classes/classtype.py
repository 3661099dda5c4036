"""`ClassKind` is a literal type with all known word classes; used for type hinting and
to support autocomplete suggestions.
"""

from typing import Literal, Tuple, get_args

ClassKind = Literal[
    "all-words",
    "injective",
    "onto",
    "near-balanced",
    "equitable",
    "monotone",
    "lipschitz",
    "cyclic-categories",
    "augmented-onto",
    "lattice",
]

CLASS_KINDS: Tuple[str, ...] = get_args(ClassKind)
