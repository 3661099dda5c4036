"""
# Transition digraphs

The transition digraph of a class (`ucyc.digraph.digraph.TransitionDigraph`) has the
(k-1)-letter windows of member words as vertices and one edge per member word, from
its prefix to its suffix. A U-cycle of the class is exactly an Eulerian circuit of
this digraph, which exists iff the digraph is balanced and weakly connected:

- `ucyc.digraph.checks.check_balance` compares in- and out-degrees,
- `ucyc.digraph.checks.check_connectivity` finds weak components,
- `ucyc.digraph.checks.reaches` / `reaching_set` answer directed reachability
  questions such as "does every vertex reach a vertex of full degree?",
- `ucyc.digraph.degrees.predicted_degrees` gives the degrees the counting arguments
  predict from a vertex word alone.

Example use:

```python
>>> from ucyc.classes import build_spec
>>> from ucyc.digraph import build, check_balance, check_connectivity

>>> g = build(build_spec("equitable", 4, alphabet_size=2))
>>> g.vertex_count, g.edge_count
(6, 6)
>>> check_balance(g).balanced
True
>>> check_connectivity(g).component_sizes
(4, 2)
```

"""

from .types import (
    DegreeWitness,
    BalanceReport,
    ConnectivityReport,
    WordTooShortError,
    UnknownVertexError,
)
from .digraph import TransitionDigraph, build
from .unionfind import UnionFind
from .checks import (
    check_balance,
    check_connectivity,
    reaches,
    reaching_set,
    follows_edges,
)
from .degrees import monotone_degree, predicted_degrees, predicted_degree_mismatches
