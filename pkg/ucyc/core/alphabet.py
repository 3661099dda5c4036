"""OrderedAlphabet class and letter distances."""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple
import collections
import string
from .types import InvalidAlphabetError, SymbolIndexError

MAX_LETTER_NAMES = 26
"""Alphabets up to this size get the names a, b, c, ...; larger ones get s0, s1, ..."""

RESERVED_CHARACTERS = ",|"
"""Characters that separate tokens and categories in the text formats and can therefore
not be part of a symbol.
"""


def auto_symbol_names(size: int) -> Tuple[str, ...]:
    """Return `size` automatically generated symbol names."""
    if size <= MAX_LETTER_NAMES:
        return tuple(string.ascii_lowercase[:size])
    return tuple(f"s{i}" for i in range(size))


@dataclass(frozen=True)
class OrderedAlphabet:
    """A finite alphabet with a total order given by the order of `symbols`. Letters
    are referred to by their 0-based index everywhere inside the library; symbols only
    show up when parsing or formatting text.
    """

    symbols: Tuple[str, ...]
    """Distinct printable tokens, in alphabet order."""

    cyclic: bool = False
    """Whether the letter distance wraps around (the last letter neighbors the first)."""

    categories: Optional[Tuple[FrozenSet[int], ...]] = None
    """Optional ordered partition of the symbol indices into disjoint nonempty
    categories C_1, ..., C_c.
    """

    _index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _category_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Normalize and validate the fields."""
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise InvalidAlphabetError("an alphabet needs at least one symbol")
        duplicates = [k for k, v in collections.Counter(self.symbols).items() if v > 1]
        if duplicates:
            raise InvalidAlphabetError(f"duplicate symbols ({', '.join(duplicates)})")
        for symbol in self.symbols:
            if (
                not symbol
                or not symbol.isprintable()
                or symbol != symbol.strip()
                or any(c in symbol for c in RESERVED_CHARACTERS)
            ):
                raise InvalidAlphabetError(f"symbol {symbol!r} is not a valid token")
        object.__setattr__(
            self, "_index", {s: i for i, s in enumerate(self.symbols)}
        )
        if self.categories is None:
            object.__setattr__(self, "_category_of", ())
            return

        categories = tuple(frozenset(c) for c in self.categories)
        object.__setattr__(self, "categories", categories)
        category_of = [-1] * self.size
        for cat_no, category in enumerate(categories):
            if not category:
                raise InvalidAlphabetError(f"category {cat_no + 1} is empty")
            for i in category:
                if not 0 <= i < self.size:
                    raise InvalidAlphabetError(
                        f"category {cat_no + 1} refers to unknown symbol index {i}"
                    )
                if category_of[i] != -1:
                    raise InvalidAlphabetError(
                        f"symbol {self.symbols[i]!r} is in more than one category"
                    )
                category_of[i] = cat_no
        missing = [self.symbols[i] for i, c in enumerate(category_of) if c == -1]
        if missing:
            raise InvalidAlphabetError(
                f"symbols without a category ({', '.join(missing)})"
            )
        object.__setattr__(self, "_category_of", tuple(category_of))

    # ----- Constructors -----

    @classmethod
    def of_size(cls, size: int, cyclic: bool = False) -> OrderedAlphabet:
        """Create an alphabet with `size` auto-named symbols."""
        if size < 1:
            raise InvalidAlphabetError("an alphabet needs at least one symbol")
        return cls(auto_symbol_names(size), cyclic=cyclic)

    @classmethod
    def from_tokens(cls, text: str, cyclic: bool = False) -> OrderedAlphabet:
        """Create an alphabet from a comma-separated list of tokens, e.g. "A,B,C"."""
        return cls(tuple(t.strip() for t in text.split(",")), cyclic=cyclic)

    def with_categories(self, text: str) -> OrderedAlphabet:
        """Return a copy of this alphabet with categories parsed from `text`, pipe-
        separated groups of tokens, e.g. "AEI|BCD" or "x+,y+,z+|x-,y-,z-".
        """
        categories = []
        for group in text.split("|"):
            group = group.strip()
            if "," in group:
                tokens = [t.strip() for t in group.split(",")]
            elif self.is_single_char:
                tokens = list(group)
            else:
                tokens = [group]
            categories.append(frozenset(self.index_of(t) for t in tokens))
        return OrderedAlphabet(self.symbols, self.cyclic, tuple(categories))

    # ----- Accessors -----

    @property
    def size(self) -> int:
        """The number of symbols n."""
        return len(self.symbols)

    @property
    def is_single_char(self) -> bool:
        """True if every symbol is a single character."""
        return all(len(s) == 1 for s in self.symbols)

    @property
    def category_count(self) -> int:
        """The number of categories c, 0 if there are none."""
        return len(self.categories) if self.categories is not None else 0

    @property
    def category_table(self) -> Tuple[int, ...]:
        """Category number per letter index; empty without categories."""
        return self._category_of

    def check_index(self, i: int) -> None:
        """Raise `SymbolIndexError` if `i` is not a letter of this alphabet."""
        if not 0 <= i < self.size:
            raise SymbolIndexError(i, self.size)

    def index_of(self, token: str) -> int:
        """Map a symbol to its index."""
        try:
            return self._index[token]
        except KeyError as exc:
            raise ValueError(
                f"Unknown symbol '{token}'. Known symbols are: {', '.join(self.symbols)}"
            ) from exc

    def category_of(self, i: int) -> int:
        """Return the 0-based category number of letter `i`."""
        if self.categories is None:
            raise ValueError("This alphabet has no categories.")
        self.check_index(i)
        return self._category_of[i]

    # ----- Text format -----

    def format(self, letters: Iterable[int]) -> str:
        """Render letters as a token string; tokens are joined by nothing when all
        symbols are single characters, otherwise by commas.
        """
        sep = "" if self.is_single_char else ","
        return sep.join(self.symbols[i] for i in letters)

    def parse(self, text: str) -> Tuple[int, ...]:
        """Parse a token string as written by `format`. Tokens that aren't symbols but
        decimal indices below the alphabet size are accepted as indices, so that e.g.
        "0110" can be read over the alphabet a, b.
        """
        text = text.strip()
        if not text:
            return ()
        if "," in text or not self.is_single_char:
            tokens = [t.strip() for t in text.split(",")]
        else:
            tokens = list(text)
        if all(t in self._index for t in tokens):
            return tuple(self._index[t] for t in tokens)
        if all(t.isdigit() and int(t) < self.size for t in tokens):
            return tuple(int(t) for t in tokens)
        unknown = sorted(set(t for t in tokens if t not in self._index))
        raise ValueError(
            f"Unknown tokens ({', '.join(unknown)}). "
            f"Known symbols are: {', '.join(self.symbols)}"
        )

    def __str__(self) -> str:
        res = f"Alphabet {{{', '.join(self.symbols)}}}"
        if self.cyclic:
            res += " (cyclic)"
        if self.categories is not None:
            groups = [
                ",".join(self.symbols[i] for i in sorted(c)) for c in self.categories
            ]
            res += f" with categories {' | '.join(groups)}"
        return res


def letter_distance(alphabet: OrderedAlphabet, i: int, j: int) -> int:
    """Distance between letters `i` and `j`: |i - j| on a linear alphabet,
    min(|i - j|, n - |i - j|) on a cyclic one.
    """
    alphabet.check_index(i)
    alphabet.check_index(j)
    d = abs(i - j)
    if alphabet.cyclic:
        return min(d, alphabet.size - d)
    return d


def parse_alphabet(
    size: Optional[int] = None,
    tokens: Optional[str] = None,
    cyclic: bool = False,
    categories: Optional[str] = None,
) -> OrderedAlphabet:
    """Create an alphabet from the text-format options (`--alphabet-size N` or
    `--alphabet A,B,C`, plus `--cyclic` and `--categories "AEI|BCD"`).
    """
    if (size is None) == (tokens is None):
        raise ValueError("Specify exactly one of alphabet size or alphabet tokens.")
    if tokens is not None:
        alphabet = OrderedAlphabet.from_tokens(tokens, cyclic=cyclic)
    else:
        alphabet = OrderedAlphabet.of_size(size, cyclic=cyclic)  # type: ignore
    if categories:
        alphabet = alphabet.with_categories(categories)
    return alphabet


def permuted(alphabet: OrderedAlphabet, order: Sequence[int]) -> OrderedAlphabet:
    """Return the alphabet with its symbols rearranged so that the new i-th symbol is
    the old `order[i]`-th one. Categories follow their symbols.
    """
    if sorted(order) != list(range(alphabet.size)):
        raise ValueError("`order` must be a permutation of the symbol indices.")
    new_position = {old: new for new, old in enumerate(order)}
    categories = None
    if alphabet.categories is not None:
        categories = tuple(
            frozenset(new_position[i] for i in c) for c in alphabet.categories
        )
    return OrderedAlphabet(
        tuple(alphabet.symbols[i] for i in order), alphabet.cyclic, categories
    )
