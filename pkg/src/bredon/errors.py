"""Exception hierarchy shared by all bredon modules."""


class BredonError(Exception):
    """Base class for every error raised by this package."""


# groups
class GroupError(BredonError, ValueError):
    pass


class NonAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class OutOfRange(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


# orbit category
class NonComposable(BredonError, ValueError):
    pass


class NotASubgroupPair(BredonError, ValueError):
    pass


class NotAMorphism(BredonError, ValueError):
    pass


# coefficients
class CoefficientError(BredonError, ValueError):
    pass


class InvalidRepresentation(CoefficientError):
    pass


class InconsistentCompletion(CoefficientError):
    pass


# G-sets and F-groups
class GSetError(BredonError, ValueError):
    pass


class NotEquivariant(GSetError):
    pass


class BasepointGenerator(BredonError, ValueError):
    pass


class RankMismatch(BredonError, ValueError):
    pass


# simplicial
class SimplicialError(BredonError, ValueError):
    pass


class NotClosedUnderFaces(SimplicialError):
    pass


class NotClosedUnderAction(SimplicialError):
    pass


class OrderNotInvariant(SimplicialError):
    pass


class OrderNotTotalOnSimplex(SimplicialError):
    pass


class UnknownBuiltin(BredonError, KeyError):
    pass


# homology / transfer
class GroupMismatch(BredonError, ValueError):
    pass


class NotAComplex(BredonError, ValueError):
    pass


class NotACovering(BredonError, ValueError):
    pass


class NotLevelwiseCovering(NotACovering):
    pass
