"""
# Command line interface

```
ucyc gen    --class monotone --alphabet-size 2 --length 4 [--json] [--trace]
ucyc verify --class all-words --alphabet-size 2 --length 3 --cycle 11101000
ucyc stats  --class equitable --alphabet-size 2 --length 4
ucyc count  --class augmented-onto --aug-a 1 --aug-b 2 --alphabet-size 3 --length 4
ucyc list   --class lattice --lattice-dim 2 --lattice-radius 1 --length 3
ucyc list   --classes
ucyc sweep  [--grid docs/example_grid.yaml] [--jobs 4]
```

Exit codes: 0 on success, 1 if `gen` finds no U-cycle (the certificate goes to
standard error as JSON), 2 if `verify` rejects the cycle, 64 on invalid arguments.

`sweep` prints one JSON line per grid point with the class parameters, the word
count, whether a U-cycle exists (`exists_empirically`), the existence claim
(`claimed`, `basis`), and whether the two `agree` (`null` where nothing is claimed).
Disagreements are also reported as `ClaimDisagreementWarning`s on standard error. See
`ucyc.cli.grid` for the grid file format.

"""

from .types import (
    EX_OK,
    EX_NON_EULERIAN,
    EX_NOT_VERIFIED,
    EX_USAGE,
    ClaimDisagreementWarning,
)
from .grid import DEFAULT_GRID, load_grid, expand_entry, grid_points
from .cli import main, build_parser, spec_from_point, sweep_point
