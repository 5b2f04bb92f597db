"""Exception hierarchy. Every error raised by the package derives from :class:`RankYankError`."""


class RankYankError(ValueError):
    pass


class EmptyClassError(RankYankError):
    def __init__(self, position: int):
        super().__init__(f"indifference class {position} is empty")
        self.position = position


class DuplicateAlternativeError(RankYankError):
    def __init__(self, index: int, position: int):
        super().__init__(f"alternative {index} appears again in class {position}")
        self.index = index
        self.position = position


class MissingAlternativeError(RankYankError):
    def __init__(self, missing):
        missing = sorted(missing)
        super().__init__(f"alternatives not ranked: {missing}")
        self.missing = missing


class IndexOutOfRangeError(RankYankError, IndexError):
    def __init__(self, index, m: int):
        super().__init__(f"alternative index {index!r} outside 0..{m - 1}")
        self.index = index
        self.m = m


class SameAlternativeError(RankYankError):
    def __init__(self, index: int):
        super().__init__(f"cannot compare alternative {index} with itself")
        self.index = index


class DimensionMismatchError(RankYankError):
    pass


class ScopeTooLargeError(RankYankError):
    pass


class ParseError(RankYankError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InconsistentRosterError(ParseError):
    pass
