"""Exception types shared across the package."""


class RealLefschetzError(ValueError):
    """Base class for domain errors (bad input rather than bugs)."""


class NotInvolution(RealLefschetzError):
    """An affine map was expected to be a real structure but is not."""


class InvariantViolation(RealLefschetzError):
    """A curve is not setwise invariant under the relevant real structure.

    ``index`` is the 1-based chain position when raised from chain building.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NonPrimitive(RealLefschetzError):
    """A class vector is zero or has a common divisor."""


class IllegalMove(RealLefschetzError):
    """A twin move or twin flip was requested where it is not defined."""


class SearchLimitExceeded(RuntimeError):
    """The census search hit its node budget.

    ``partial`` holds the (sorted, deduplicated) chains found so far.
    """

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)
