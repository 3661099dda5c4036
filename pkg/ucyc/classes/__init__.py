"""
# Restricted word classes

A `ucyc.classes.spec.ClassSpec` describes one class: an alphabet, a word length k, a
class kind and its parameters. Supported kinds (`ucyc.classes.classtype.ClassKind`):

| Kind                | Members                                                     |
|---------------------|-------------------------------------------------------------|
| `all-words`         | every word (de Bruijn)                                      |
| `injective`         | no letter repeats                                           |
| `onto`              | every letter occurs                                         |
| `near-balanced`     | binary, ceil(k/2) of one letter and floor(k/2) of the other |
| `equitable`         | every letter occurs floor(k/n) or ceil(k/n) times           |
| `monotone`          | some rotation is non-decreasing (`decreasing`: non-increasing) |
| `lipschitz`         | consecutive letters at most `c` apart, cyclic alphabet      |
| `cyclic-categories` | letter categories follow their cyclic order                 |
| `augmented-onto`    | every letter occurs at least `a` and at most `b` times      |
| `lattice`           | paths ending within l1 distance `radius` of the origin      |

Every class is enumerated by filtering all n^k candidate words, so the library is
meant for small parameters. The number of candidates per enumeration is capped by a
budget (`ucyc.classes.classes.DEFAULT_BUDGET`), which the `UCYC_BUDGET` environment
variable or an explicit `budget` argument override.

`existence_claim` reports what the known results say about a U-cycle for the class.
It never computes anything; compare it with `ucyc.euler.generate` to check it.

Example use:

```python
>>> from ucyc.classes import build_spec, count, existence_claim, summarize

>>> spec = build_spec("monotone", 4, alphabet_size=2)
>>> count(spec)
14
>>> existence_claim(spec)
ExistenceClaim(status='exists', basis='monotone words, all k and n')
>>> summarize(build_spec("equitable", 4, alphabet_size=2)).p()
equitable words of length 4 over Alphabet {a, b}: 6 words; a U-cycle is claimed not to exist (equitable words, iff k is not a multiple of n)
```

Register new kinds in `ucyc.classes.classes_directory`.

"""

from .classtype import ClassKind, CLASS_KINDS
from .types import (
    ClaimStatus,
    ExistenceClaim,
    ClassSummary,
    InvalidSpecError,
    WordMismatchError,
    BudgetExceededError,
    DegenerateClassWarning,
)
from .spec import ClassSpec, build_spec, PARAMETERS_BY_KIND
from .wordclass import WordClass, get_word_class, get_all_word_classes
from .predicates import cyclic_descents
from .classes import (
    DEFAULT_BUDGET,
    BUDGET_ENV_VAR,
    CHUNK_SIZE,
    get_budget,
    check_budget,
    member_mask,
    enumerate_ranks,
    enumerate_words,
    count,
    is_member,
    existence_claim,
    summarize,
)
