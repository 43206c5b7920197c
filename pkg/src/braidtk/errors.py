"""Exception types raised by braidtk."""


class BraidtkError(Exception):
    """Base class for all library errors."""


class BraidSyntaxError(BraidtkError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class LetterRangeError(BraidtkError, ValueError):
    pass


class MoveNotApplicable(BraidtkError, ValueError):
    pass


class PreconditionViolated(BraidtkError, ValueError):
    pass


class BudgetExhausted(BraidtkError, RuntimeError):
    pass


class UnreachableColumn(BraidtkError, ValueError):
    pass


class SplitBraidError(BraidtkError, ValueError):
    pass


class NotAKnotError(BraidtkError, ValueError):
    pass


class MissingRotationData(BraidtkError, ValueError):
    pass


class DivideError(BraidtkError, ValueError):
    """Raised for malformed, non ordered-Morse, or disconnected divides."""

    def __init__(self, kind, message):
        self.kind = kind
        super().__init__(f"{kind}: {message}")
