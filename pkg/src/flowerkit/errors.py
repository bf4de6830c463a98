"""Exception hierarchy shared by every flowerkit module."""


class FlowerkitError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class BadParams(FlowerkitError, ValueError):
    pass


class EmptyEdge(FlowerkitError, ValueError):
    pass


class EmptyFamily(FlowerkitError, ValueError):
    pass


class GroundSetTooLarge(FlowerkitError, ValueError):
    pass


class TooLarge(FlowerkitError, ValueError):
    pass


class NotPrime(BadParams):
    pass


class ThresholdTooSmall(FlowerkitError, ValueError):
    pass


class PreconditionViolated(FlowerkitError, ValueError):
    pass


class DimensionMismatch(FlowerkitError, ValueError):
    pass


class ParseError(FlowerkitError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
