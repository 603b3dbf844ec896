"""Exception types shared across the package."""


class ParseError(ValueError):
    """Element text that does not match the grammar.

    `offset` is the byte offset of the offending token in the input.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class NegativeSecondIndexError(ParseError):
    """A basis index with second component < 0 (the basis has none)."""


class CentralNotAllowedError(ParseError):
    """The central generator 'c' used outside the extended algebra."""


class ZeroDenominatorError(ParseError):
    """A coefficient with denominator 0."""


class ZeroElementError(ValueError):
    """An operation that needs a nonzero element got the zero element."""


class NotInWittError(ValueError):
    """An element outside the span of L[alpha,0] passed to a Witt-only map."""


class WindowTooSmallError(ValueError):
    """A window/interior pair without the required safety margins."""
