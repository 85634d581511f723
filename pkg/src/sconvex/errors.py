"""Exception hierarchy shared by every sconvex module."""

from __future__ import annotations


class SconvexError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(SconvexError):
    """Vectors or matrices of incompatible dimensions were combined."""


class ArgumentError(SconvexError):
    """An argument violates a structural requirement (empty list, zero ray, ...)."""


class PreconditionError(SconvexError):
    """An operation's mathematical precondition is not met."""


class NotHullAddibleError(PreconditionError):
    """The origin lies in the convex hull of the given rays.

    Carries the convex coefficients certifying the failure: ``coefficients``
    are nonnegative rationals summing to one whose weighted ray sum is the
    zero vector.
    """

    def __init__(self, message: str, coefficients):
        super().__init__(message)
        self.coefficients = coefficients


class DegenerateCombinationError(SconvexError):
    """A spherical combination collapsed to (numerically) the origin."""


class GatedFeatureError(SconvexError):
    """A convexity-gated check was requested on a non-convex gauge."""


class EnumerationBoundError(SconvexError):
    """A brute-force oracle was asked to enumerate beyond its size cap."""


class InternalInconsistencyError(SconvexError):
    """A certificate produced internally failed its own replay; a library bug."""


class ReplayError(SconvexError):
    """A certificate did not re-verify under independent arithmetic."""
