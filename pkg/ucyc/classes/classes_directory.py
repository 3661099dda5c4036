"""The directory (i.e., dictionary) of all known word classes. To be accessed via the
functions in `ucyc.classes.wordclass`. This module is factored out so the directory
can be imported late within functions in order to prevent circular dependencies.
"""

from typing import Dict, Final
from .wordclass import WordClass
from .classtype import ClassKind
from . import claims, masks, predicates

CLASS_DIRECTORY: Final[Dict[ClassKind, WordClass]] = {
    "all-words": WordClass(
        name="all-words",
        description="every word (de Bruijn)",
        is_member=predicates.is_all_words,
        member_mask=masks.all_words_mask,
        existence_claim=claims.all_words_claim,
    ),
    "injective": WordClass(
        name="injective",
        description="no letter repeats",
        is_member=predicates.is_injective,
        member_mask=masks.injective_mask,
        existence_claim=claims.injective_claim,
    ),
    "onto": WordClass(
        name="onto",
        description="every letter occurs",
        is_member=predicates.is_onto,
        member_mask=masks.onto_mask,
        existence_claim=claims.onto_claim,
    ),
    "near-balanced": WordClass(
        name="near-balanced",
        description="binary, ceil(k/2) of one letter and floor(k/2) of the other",
        is_member=predicates.is_near_balanced,
        member_mask=masks.near_balanced_mask,
        existence_claim=claims.near_balanced_claim,
    ),
    "equitable": WordClass(
        name="equitable",
        description="every letter occurs floor(k/n) or ceil(k/n) times",
        is_member=predicates.is_equitable,
        member_mask=masks.equitable_mask,
        existence_claim=claims.equitable_claim,
    ),
    "monotone": WordClass(
        name="monotone",
        description="some rotation is non-decreasing (or non-increasing)",
        is_member=predicates.is_monotone,
        member_mask=masks.monotone_mask,
        existence_claim=claims.monotone_claim,
    ),
    "lipschitz": WordClass(
        name="lipschitz",
        description="consecutive letters at most c apart on a cyclic alphabet",
        is_member=predicates.is_lipschitz,
        member_mask=masks.lipschitz_mask,
        existence_claim=claims.lipschitz_claim,
    ),
    "cyclic-categories": WordClass(
        name="cyclic-categories",
        description="letter categories follow their cyclic order",
        is_member=predicates.is_cyclic_categories,
        member_mask=masks.cyclic_categories_mask,
        existence_claim=claims.cyclic_categories_claim,
    ),
    "augmented-onto": WordClass(
        name="augmented-onto",
        description="every letter occurs at least a and at most b times",
        is_member=predicates.is_augmented_onto,
        member_mask=masks.augmented_onto_mask,
        existence_claim=claims.augmented_onto_claim,
    ),
    "lattice": WordClass(
        name="lattice",
        description="lattice paths ending within l1 distance `radius` of the origin",
        is_member=predicates.is_lattice_path,
        member_mask=masks.lattice_mask,
        existence_claim=claims.lattice_claim,
    ),
}
