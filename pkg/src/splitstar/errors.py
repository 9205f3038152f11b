"""Exception hierarchy shared by every module of the package."""


class SplitStarError(Exception):
    """Base class for all errors raised by :mod:`splitstar`."""


# permutation parsing / arithmetic
class BadToken(SplitStarError, ValueError):
    pass


class BadLength(SplitStarError, ValueError):
    pass


class NotABijection(SplitStarError, ValueError):
    pass


class OutOfRange(SplitStarError, ValueError):
    pass


class DimensionMismatch(SplitStarError, ValueError):
    pass


# topology
class BadIndex(SplitStarError, ValueError):
    pass


class NotAdjacent(SplitStarError, ValueError):
    pass


class NotIntraSubnetwork(SplitStarError, ValueError):
    pass


# constructions
class OutOfScope(SplitStarError, ValueError):
    pass


class SameEndpoints(SplitStarError, ValueError):
    pass


class DimensionTooSmall(SplitStarError, ValueError):
    pass


class BadSymbol(SplitStarError, ValueError):
    pass


class BadPair(SplitStarError, ValueError):
    pass


class EdgeTouchesRemoved(SplitStarError, ValueError):
    pass


class BadSelection(SplitStarError, ValueError):
    pass


class NotADcc(SplitStarError, ValueError):
    pass


class SameVertex(SplitStarError, ValueError):
    pass


class NotBaseDimension(SplitStarError, ValueError):
    pass


class UnsupportedDimension(SplitStarError, ValueError):
    pass


class ConstructionError(SplitStarError, RuntimeError):
    """A constructor could not complete; always indicates a bug."""
