"""
# Eulerian circuits and U-cycles

`ucyc.euler.circuit.eulerian_circuit` extracts an Eulerian circuit from a transition
digraph with Hierholzer's algorithm, or returns a `NonEulerian` certificate naming the
failed precondition (unbalanced, disconnected, or empty). The circuit is deterministic:
it starts at the least-rank vertex and always leaves a vertex by its least unused edge.

`ucyc.euler.circuit.fold` turns a circuit of overlapping words into a cyclic string,
and `ucyc.euler.generate.generate` runs the whole pipeline for a class.

Example use:

```python
>>> from ucyc.classes import build_spec
>>> from ucyc.euler import generate

>>> generate(build_spec("all-words", 3, alphabet="0,1")).p()
U-cycle of all-words words of length 3 over Alphabet {0, 1} (8 letters): 00010111
>>> generate(build_spec("equitable", 4, alphabet="0,1")).reason
'disconnected'
```

"""

from .types import (
    Circuit,
    NonEulerian,
    NonEulerianReason,
    UCycleReport,
    MalformedCircuitError,
)
from .circuit import eulerian_circuit, fold, fold_ranks
from .generate import generate
