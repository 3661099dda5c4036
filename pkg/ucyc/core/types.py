"""Core exceptions."""


class SymbolIndexError(IndexError):
    def __init__(self, index: int, size: int, *args, **kwargs):
        msg = f"Symbol index {index} is out of range for an alphabet of size {size}."
        super().__init__(msg, *args, **kwargs)


class RankOutOfRangeError(ValueError):
    def __init__(self, rank: int, size: int, length: int, *args, **kwargs):
        msg = (
            f"Rank {rank} is out of range for words of length {length} over an "
            f"alphabet of size {size} (must be < {size ** length})."
        )
        super().__init__(msg, *args, **kwargs)


class WindowLengthError(ValueError):
    def __init__(self, window: int, length: int, *args, **kwargs):
        msg = f"Window length {window} exceeds cycle length {length}."
        super().__init__(msg, *args, **kwargs)


class InvalidAlphabetError(ValueError):
    def __init__(self, reason: str, *args, **kwargs):
        super().__init__(f"Invalid alphabet: {reason}", *args, **kwargs)
