class GSetCAError(Exception):
    """Base class for errors raised by this package."""


class MembershipError(GSetCAError, ValueError):
    pass


class CoverageError(GSetCAError, LookupError):
    """A representative lookup found no coordinate for a cell."""


class UnknownSymbol(GSetCAError, ValueError):
    pass


class QuiescenceError(GSetCAError, ValueError):
    pass


class TooLarge(GSetCAError, ValueError):
    pass


class NotAStabilizer(GSetCAError, ValueError):
    pass


class IncompatibleStateSets(GSetCAError, ValueError):
    pass


class UnknownCell(GSetCAError, KeyError):
    pass


class ToleranceCollision(GSetCAError, RuntimeError):
    pass


class RuleFileError(GSetCAError, ValueError):
    """Validation failure in a rule or configuration file; ``field`` locates it."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
