"""Exception hierarchy shared by all sgplink modules."""


class SgplinkError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyInput(SgplinkError):
    pass


class GcdNotOne(SgplinkError):
    pass


class NotAMember(SgplinkError):
    pass


class AmbientMismatch(SgplinkError):
    pass


class LengthMismatch(SgplinkError):
    pass


class CapExceeded(SgplinkError):
    pass


class EnumerationLimitExceeded(SgplinkError):
    pass


class WindowTooNarrow(SgplinkError):
    pass


class ParseError(SgplinkError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
