class VeribenchError(Exception):
    pass


class SizeExceededError(VeribenchError, ValueError):
    """Input is larger than the operation's stated scale."""


class DomainError(VeribenchError, ValueError):
    pass


class InvalidMatchingError(VeribenchError, ValueError):
    pass


class InvalidPathError(VeribenchError, ValueError):
    pass


class HaltedDeckError(VeribenchError, ValueError):
    """The deck already has card 1 on top."""


class MemoryBoundError(VeribenchError, MemoryError):
    pass


class ConvergenceError(VeribenchError, ArithmeticError):
    pass
