"""Exception hierarchy shared by all modules."""


class OkounkovError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(OkounkovError, ValueError):
    """Operands live in spaces of different dimension."""


class ShapeError(OkounkovError, ValueError):
    """A matrix does not have the required shape."""


class ValidationError(OkounkovError, ValueError):
    """Input violates a documented precondition."""


class UnsupportedError(OkounkovError, ValueError):
    """The operation is not defined for this group family."""


class UndefinedValuationError(OkounkovError, ValueError):
    """The valuation of the zero function was requested."""


class UnboundedError(OkounkovError, ValueError):
    """An inequality system does not describe a bounded set."""


class ResourceError(OkounkovError, RuntimeError):
    """A configured enumeration cap would be exceeded."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count
