class VnumError(Exception):
    """Base class for every error raised by the package."""


class InvalidInput(VnumError, ValueError):
    pass


class Undefined(VnumError, ValueError):
    """A quantity that has no value for this input (e.g. alpha of the zero ideal)."""


class NotProper(VnumError, ValueError):
    """The ideal is zero or the unit ideal."""


class MethodInapplicable(VnumError):
    pass


class GuardExceeded(VnumError):
    """A desk-scale guard (subset count, witness degree) was hit."""
