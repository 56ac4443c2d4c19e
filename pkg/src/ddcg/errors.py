"""Exception types raised across the package."""

from __future__ import annotations


class DdcgError(ValueError):
    """Base class for all precondition and data errors."""


class OrderMismatch(DdcgError):
    def __init__(self, actual: int, declared: int):
        super().__init__(f"generated order {actual} != declared order {declared}")
        self.actual = actual
        self.declared = declared


class DegreeMismatch(DdcgError):
    pass


class NotASubgroup(DdcgError):
    pass


class CatalogError(DdcgError):
    pass


class CatalogIncomplete(CatalogError):
    def __init__(self, order: int, found: int | None = None, expected: int | None = None):
        detail = "" if found is None else f" ({found} groups, expected {expected})"
        super().__init__(f"catalog incomplete for order {order}{detail}")
        self.order = order


class IdentityInSet(DdcgError):
    pass


class NotInverseClosed(DdcgError):
    pass


class SameVertex(DdcgError):
    pass


class TooLarge(DdcgError):
    pass


class MalformedString(DdcgError):
    pass


class UnsupportedSize(DdcgError):
    pass


class RegularActionFailed(DdcgError):
    pass


class NotSymmetricPermutation(DdcgError):
    pass


class MuNotLambdaPlusOne(DdcgError):
    pass


class NotPrimePower(DdcgError):
    pass


class WrongResidueClass(DdcgError):
    pass


class NotRegularGraphical(DdcgError):
    pass


class UnsupportedOrder(DdcgError):
    pass


class VerificationFailed(DdcgError):
    pass
