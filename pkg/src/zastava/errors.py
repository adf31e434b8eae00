"""Exception types raised across the package.

All of them derive from :class:`ZastavaError`, itself a :class:`ValueError`,
so callers that only care about "bad input" can catch ``ValueError``.
"""


class ZastavaError(ValueError):
    pass


class NonzeroConstantTerm(ZastavaError):
    """Division by q requested for a polynomial with nonzero constant term."""


class InvalidCartanMatrix(ZastavaError):
    pass


class NotFiniteType(ZastavaError):
    """Reflection closure did not terminate within the safety bound."""


class RankMismatch(ZastavaError):
    pass


class TorusRankTooSmall(ZastavaError):
    pass


class HeightBoundExceeded(ZastavaError):
    pass


class NotDominantSum(ZastavaError):
    """A coweight expected in the nonnegative cone has a negative coordinate."""


class NotStrictlyDominant(ZastavaError):
    pass


class PartitionSumMismatch(ZastavaError):
    pass


class CapExceeded(ZastavaError):
    """An enumeration would exceed its hard cap."""


class WrongSide(ZastavaError):
    pass


class AmbientMismatch(ZastavaError):
    pass


class InvalidComplex(ZastavaError):
    pass
