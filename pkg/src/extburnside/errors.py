class EbrError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(EbrError):
    pass


class CapacityError(EbrError):
    pass


class NotASubgroupError(EbrError):
    pass


class NotACocycleError(EbrError):
    pass


class UnknownLabelError(EbrError):
    pass
