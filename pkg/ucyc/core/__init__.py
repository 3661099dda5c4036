"""
# Alphabets, words, and cyclic strings

The shared vocabulary of every other submodule:

- `ucyc.core.alphabet.OrderedAlphabet`: the symbols, their order, whether the letter
  distance wraps around, and an optional partition into categories.
- `ucyc.core.words.Word`: a fixed-length sequence of letter indices.
- `ucyc.core.words.CyclicString`: a string read cyclically; rotations compare equal.

Letters are 0-based indices internally; symbols only appear when parsing or formatting.

Example use:

```python
>>> from ucyc.core import OrderedAlphabet, CyclicString, Word, cyclic_windows, rank

>>> ab = OrderedAlphabet.from_tokens("0,1")
>>> cycle = CyclicString.from_text("0011", ab)
>>> [w.to_text(ab) for w in cyclic_windows(cycle, 2)]
['00', '01', '11', '10']

>>> rank(Word.from_text("111", ab), ab)
7
```

"""

from .types import (
    SymbolIndexError,
    RankOutOfRangeError,
    WindowLengthError,
    InvalidAlphabetError,
)
from .alphabet import (
    OrderedAlphabet,
    letter_distance,
    parse_alphabet,
    permuted,
    auto_symbol_names,
)
from .words import (
    Word,
    CyclicString,
    rank,
    unrank,
    cyclic_windows,
    least_rotation,
    digits_of,
    ranks_of,
    window_digits,
    check_rank_space,
)
