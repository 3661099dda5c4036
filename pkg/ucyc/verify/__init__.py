"""
# Verifying U-cycles

`ucyc.verify.verify.verify` checks a cyclic string against a class by extracting its
windows and comparing them with the class enumeration; it never builds a digraph, so
it serves as an independent check of `ucyc.euler`. Problems are reported, not raised:
see `ucyc.verify.types.VerificationReport`.

`ucyc.verify.verify.exhaustive_nonexistence` confirms by brute force that a small
class has no U-cycle at all.

Example use:

```python
>>> from ucyc.classes import build_spec
>>> from ucyc.core import CyclicString
>>> from ucyc.verify import verify, exhaustive_nonexistence

>>> spec = build_spec("monotone", 4, alphabet="0,1")
>>> verify(CyclicString.from_text("00010011110110", spec.alphabet), spec).ok
True
>>> exhaustive_nonexistence(build_spec("equitable", 4, alphabet_size=2))
True
```

"""

from .types import Failure, FailureKind, VerificationReport
from .verify import FAILURE_CAP, verify, exhaustive_nonexistence
