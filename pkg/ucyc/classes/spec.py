"""ClassSpec class."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, Union
import warnings
from frozendict import frozendict
from ..core import OrderedAlphabet, parse_alphabet
from ..lattice import StepAlphabet, lattice_step_alphabet, honeycomb_alphabet
from .classtype import ClassKind, CLASS_KINDS
from .types import InvalidSpecError, DegenerateClassWarning

PARAMETERS_BY_KIND = {
    "lipschitz": ("c",),
    "augmented-onto": ("a", "b"),
    "lattice": ("dimension", "radius"),
}
"""Parameters each kind requires. Kinds not listed take no parameters."""


@dataclass(frozen=True)
class ClassSpec:
    """A restricted word class: the words of length `word_length` over `alphabet` that
    satisfy the definition selected by `kind` and its parameters.

    Specs are immutable and hashable, so they can key caches and be shared freely.
    """

    alphabet: OrderedAlphabet
    word_length: int
    kind: ClassKind = "all-words"

    c: Optional[int] = None
    """Lipschitz constant: consecutive letters are at most `c` apart."""

    a: Optional[int] = None
    """Augmented onto words: every letter occurs at least `a` times..."""

    b: Optional[int] = None
    """...and at most `b` times."""

    dimension: Optional[int] = None
    """Lattice paths: dimension m of the lattice; the alphabet has 2m steps."""

    radius: Optional[int] = None
    """Lattice paths: maximum l1 distance of the endpoint from the origin."""

    decreasing: bool = False
    """Monotone words: use the non-increasing instead of the non-decreasing order."""

    def __post_init__(self) -> None:
        """Validate the combination of kind, alphabet and parameters."""
        if self.kind not in CLASS_KINDS:
            raise ValueError(
                f"Unknown class '{self.kind}'. Supported classes are: "
                f"{', '.join(CLASS_KINDS)}"
            )
        if self.word_length < 1:
            raise InvalidSpecError("word length must be at least 1")
        required = PARAMETERS_BY_KIND.get(self.kind, ())
        for name in ("c", "a", "b", "dimension", "radius"):
            value = getattr(self, name)
            if name in required and value is None:
                raise InvalidSpecError(f"class '{self.kind}' requires parameter {name}")
            if name not in required and value is not None:
                raise InvalidSpecError(f"class '{self.kind}' takes no parameter {name}")
        if self.decreasing and self.kind != "monotone":
            raise InvalidSpecError("only monotone words can be decreasing")
        getattr(self, f"_validate_{self.kind.replace('-', '_')}", lambda: None)()

    def _validate_near_balanced(self) -> None:
        if self.n != 2:
            raise InvalidSpecError("near-balanced words need a binary alphabet")

    def _validate_lipschitz(self) -> None:
        if self.c < 1:  # type: ignore
            raise InvalidSpecError("the Lipschitz constant must be positive")
        if not self.alphabet.cyclic:
            raise InvalidSpecError("Lipschitz words need a cyclic alphabet")
        if 2 * self.c + 1 > self.n:  # type: ignore
            warnings.warn(
                f"Lipschitz constant {self.c} with 2c+1 > n = {self.n} admits every "
                "word; treating the class as all words.",
                DegenerateClassWarning,
            )

    def _validate_cyclic_categories(self) -> None:
        if self.alphabet.categories is None:
            raise InvalidSpecError("cyclic-category words need alphabet categories")

    def _validate_augmented_onto(self) -> None:
        if self.a < 1 or self.b < 1:  # type: ignore
            raise InvalidSpecError("augmented onto bounds must be positive")
        if self.a >= self.b:  # type: ignore
            raise InvalidSpecError("augmented onto words need a < b")

    def _validate_lattice(self) -> None:
        if self.dimension < 2:  # type: ignore
            raise InvalidSpecError("lattice paths need a dimension of at least 2")
        if self.radius < 0:  # type: ignore
            raise InvalidSpecError("the lattice radius must be nonnegative")
        if self.n != 2 * self.dimension:  # type: ignore
            raise InvalidSpecError(
                f"{self.dimension}-dimensional lattice paths need an alphabet of "
                f"{2 * self.dimension} steps, not {self.n}"  # type: ignore
            )

    @property
    def n(self) -> int:
        """Alphabet size."""
        return self.alphabet.size

    @property
    def k(self) -> int:
        """Word length."""
        return self.word_length

    @property
    def steps(self) -> StepAlphabet:
        """The step alphabet of a lattice-path class."""
        if self.kind != "lattice":
            raise ValueError("Only lattice-path classes have a step alphabet.")
        return StepAlphabet(self.alphabet, self.dimension)  # type: ignore

    @property
    def is_degenerate_lipschitz(self) -> bool:
        return self.kind == "lipschitz" and 2 * self.c + 1 > self.n  # type: ignore

    def to_dict(self) -> frozendict:
        """The spec's parameters as used in JSON output."""
        res = {"class": self.kind, "n": self.n, "k": self.k}
        res.update({p: getattr(self, p) for p in PARAMETERS_BY_KIND.get(self.kind, ())})
        if self.decreasing:
            res["decreasing"] = True
        if self.alphabet.categories is not None:
            res["category_sizes"] = [len(c) for c in self.alphabet.categories]
        return frozendict(res)

    def __str__(self) -> str:
        params = ", ".join(
            f"{p}={getattr(self, p)}" for p in PARAMETERS_BY_KIND.get(self.kind, ())
        )
        res = f"{self.kind} words"
        if params:
            res += f" ({params})"
        if self.decreasing:
            res += " (decreasing)"
        return res + f" of length {self.k} over {self.alphabet}"


def build_spec(
    kind: ClassKind,
    word_length: int,
    alphabet_size: Optional[int] = None,
    alphabet: Union[None, str, OrderedAlphabet] = None,
    cyclic: Optional[bool] = None,
    categories: Optional[str] = None,
    honeycomb: bool = False,
    **params,
) -> ClassSpec:
    """Convenience constructor taking the same options as the command line.

    - `alphabet_size` / `alphabet`: either a size (symbols are named automatically) or
      comma-separated tokens or a ready-made `OrderedAlphabet`. Lattice classes may
      leave both out to get the standard step alphabet of their dimension.
    - `cyclic`: defaults to the flag of a ready-made `alphabet`, else to True for
      Lipschitz words and to False otherwise.
    - `categories`: pipe-separated groups of tokens, e.g. "AEI|BCD".
    - `honeycomb`: use the six honeycomb steps, categorized into positives and
      negatives.
    - `params`: class parameters `c`, `a`, `b`, `dimension`, `radius`, `decreasing`.
    """
    if cyclic is None:
        if isinstance(alphabet, OrderedAlphabet):
            cyclic = alphabet.cyclic
        else:
            cyclic = kind == "lipschitz"
    if honeycomb:
        if alphabet_size is not None or alphabet is not None:
            raise ValueError("The honeycomb preset comes with its own alphabet.")
        resolved = honeycomb_alphabet()
    elif isinstance(alphabet, OrderedAlphabet):
        resolved = alphabet
    elif kind == "lattice" and alphabet_size is None and alphabet is None:
        resolved = lattice_step_alphabet(params.get("dimension") or 2).alphabet
    else:
        resolved = parse_alphabet(alphabet_size, alphabet, cyclic, categories)
    if cyclic != resolved.cyclic:
        resolved = OrderedAlphabet(resolved.symbols, cyclic, resolved.categories)
    if categories and resolved.categories is None:
        resolved = resolved.with_categories(categories)
    params = {k: v for k, v in params.items() if v is not None}
    return ClassSpec(resolved, word_length, kind, **params)
