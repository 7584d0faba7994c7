"""Exception hierarchy shared by every module."""


class StrongQuotError(Exception):
    """Base class for all package errors."""


class RingError(StrongQuotError, ValueError):
    """A table or constructor argument does not describe a valid ring."""


class InvalidSizeError(RingError):
    pass


class ArityError(RingError):
    pass


class InvalidIdealError(RingError):
    pass


class RingMapError(RingError):
    pass


class CapacityError(StrongQuotError):
    """The requested computation exceeds the configured size cap."""


class ZeroAbsorbedError(StrongQuotError):
    """A multiplicative closure reached zero."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotMultiplicativeError(StrongQuotError, ValueError):
    pass


class NotOreError(StrongQuotError):
    """The set fails the Ore condition on the requested side."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidDenominatorError(StrongQuotError):
    pass


class NoSuchAssError(StrongQuotError):
    pass


class NoInducedMapError(StrongQuotError):
    pass


class InternalConsistencyError(StrongQuotError, AssertionError):
    """A computed object contradicts a theorem that must hold unconditionally."""


class SpecParseError(StrongQuotError):
    """Malformed ring-spec input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.line = line
        self.source = source
