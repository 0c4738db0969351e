"""Exception hierarchy shared by all rfsemi modules."""


class SemigroupError(Exception):
    """Base class for every error raised by rfsemi."""


class EmptyInput(SemigroupError, ValueError):
    pass


class NotCofinite(SemigroupError, ValueError):
    """The generators have a common divisor greater than one."""


class IntegerOverflow(SemigroupError, OverflowError):
    """Values would not fit in a signed 64-bit integer."""


class NotPseudoFrobenius(SemigroupError, ValueError):
    pass


class NotAlmostSymmetric(SemigroupError, ValueError):
    pass


class CapExceeded(SemigroupError, RuntimeError):
    """An enumeration produced more objects than the caller allowed."""


class OrderMismatch(SemigroupError, ValueError):
    pass


class OrderOutOfRange(SemigroupError, ValueError):
    pass


class CheckpointMismatch(SemigroupError, RuntimeError):
    """The checkpoint is missing or was written for different parameters."""
