"""Exception hierarchy shared by every module of the package."""


class GroupTheoryError(ValueError):
    """Base class for all errors raised by grouptransfer."""


# group construction
class NotAssociative(GroupTheoryError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class NoIdentity(GroupTheoryError):
    pass


class NoInverse(GroupTheoryError):
    def __init__(self, i):
        self.element = i
        super().__init__(f"element {i} has no two-sided inverse")


class SizeLimitExceeded(GroupTheoryError):
    pass


class NotASubgroup(GroupTheoryError):
    pass


class NotASubset(GroupTheoryError):
    pass


class NotNormal(GroupTheoryError):
    pass


# cosets
class InvalidRepresentatives(GroupTheoryError):
    pass


class WrongSide(GroupTheoryError):
    pass


class SystemMismatch(GroupTheoryError):
    pass


# algebra
class RingMismatch(GroupTheoryError):
    pass


class CarrierMismatch(GroupTheoryError):
    pass


class SupportOutsideSubgroup(GroupTheoryError):
    pass


class UnsupportedRing(GroupTheoryError):
    pass


class DimMismatch(GroupTheoryError):
    pass


class NonAbelianCarrier(GroupTheoryError):
    pass


class NonAbelianQuotient(NonAbelianCarrier):
    pass


# input files and expressions
class ParseError(GroupTheoryError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class ValidationError(GroupTheoryError):
    pass
