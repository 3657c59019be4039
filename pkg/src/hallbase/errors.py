"""Exception types raised by the group engine and the symbolic prover."""


class HallBaseError(Exception):
    """Base class for every error raised by this package."""


class BadPermutation(HallBaseError, ValueError):
    pass


class CapExceeded(HallBaseError):
    """Element enumeration grew past the configured cap."""


class WorkBudgetExceeded(HallBaseError):
    """A search exhausted its elementary-step budget."""


class AmbientMismatch(HallBaseError, ValueError):
    pass


class ElementNotInAmbient(HallBaseError, ValueError):
    pass


class NotSubgroup(HallBaseError, ValueError):
    pass


class NotHall(HallBaseError, ValueError):
    pass


class ParseError(HallBaseError, ValueError):
    pass


class UnknownFamily(HallBaseError, KeyError):
    def __str__(self) -> str:
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class NotEventuallyPositive(HallBaseError, ValueError):
    """The difference polynomial has a negative leading coefficient."""
