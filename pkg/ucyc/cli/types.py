"""Exit codes and warnings of the command line interface."""

EX_OK = 0
EX_NON_EULERIAN = 1
"""`gen`: the class has no U-cycle."""
EX_NOT_VERIFIED = 2
"""`verify`: the cycle is not a U-cycle of the class."""
EX_USAGE = 64
"""Invalid arguments, following the BSD sysexits convention."""


class ClaimDisagreementWarning(UserWarning):
    """A sweep point where the computed answer contradicts the existence claim."""
