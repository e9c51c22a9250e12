"""Exception types shared across the library."""


class FinspaceError(Exception):
    """Base class for all library errors."""


class DuplicateLabel(FinspaceError):
    pass


class UnknownLabel(FinspaceError):
    pass


class CycleError(FinspaceError):
    """The supplied relation is not antisymmetric."""


class EmptyPoset(FinspaceError):
    """Operation undefined on the empty poset (e.g. height)."""


class GuardExceeded(FinspaceError):
    """An enumeration bound was hit.

    Carries the offending count (or an estimate) in ``count``.
    """

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class NotDownSet(FinspaceError):
    pass


class NotATopology(FinspaceError):
    pass


class NotABeatPoint(FinspaceError):
    pass


class HeightExceeded(FinspaceError):
    pass


class ParseError(FinspaceError):
    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(FinspaceError):
    pass
