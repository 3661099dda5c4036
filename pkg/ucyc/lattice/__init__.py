"""
# Lattice-path geometry

Lattice-path words are words over a step alphabet of 2m symbols, one positive and one
negative unit step per axis (`ucyc.lattice.geometry.StepAlphabet`). For m = 2 the
steps are N, S, E, W; for m = 3 they are N, S, E, W, U, D.

- `ucyc.lattice.geometry.endpoint`: where a path from the origin ends.
- `ucyc.lattice.geometry.l1_norm`: its distance from the origin.
- `ucyc.lattice.geometry.boundary_stratum`: interior, face, edge, corner, or outside
  of the 3D cross-polytope of a given radius.

Honeycomb walks are not modeled geometrically. `ucyc.lattice.honeycomb` only provides
their step alphabet (positives and negatives as two categories) and the table of
permitted next steps.

Example use:

```python
>>> from ucyc.core import Word
>>> from ucyc.lattice import lattice_step_alphabet, endpoint, l1_norm

>>> steps = lattice_step_alphabet(2)
>>> p = endpoint(Word.from_text("EEN", steps.alphabet), steps)
>>> str(p), l1_norm(p)
('(2, 1)', 3)
```

"""

from .types import LatticePoint, Stratum, WrongDimensionError
from .geometry import (
    StepAlphabet,
    lattice_step_alphabet,
    endpoint,
    endpoints_of,
    l1_norm,
    zero_count,
    boundary_stratum,
    step_degree,
)
from .honeycomb import (
    HONEYCOMB_SYMBOLS,
    HONEYCOMB_NEXT_STEPS,
    honeycomb_alphabet,
    is_honeycomb_walk,
)
