"""Exception hierarchy shared by all liestruct modules."""


class LieStructError(Exception):
    """Base class for every error raised by liestruct."""


class DimensionMismatch(LieStructError, ValueError):
    pass


class NotSubalgebra(LieStructError):
    pass


class NotNilpotent(LieStructError):
    pass


class NotSplit(LieStructError):
    """A characteristic polynomial that must split has an irrational factor."""


class NotAWeight(LieStructError):
    pass


class DegenerateSubspace(LieStructError):
    pass


class PreconditionFailure(LieStructError):
    pass


class NoWitnessWithinCap(LieStructError):
    pass


class NotSemisimple(LieStructError):
    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class Inconclusive(LieStructError):
    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class DataError(LieStructError):
    """Input data contradicts finite-dimensional theory (e.g. an outer derivation of a semisimple level)."""


class InputError(LieStructError):
    """Malformed or invalid input file."""
