"""Typed errors shared across the package.

Every failed precondition raises a distinct class so callers (and the CLI
exit-code mapping) can tell a bad parameter from a failed construction
condition from an exhausted search budget.
"""

from __future__ import annotations


class CacError(Exception):
    """Base class for all package errors."""


class NotAUnit(CacError):
    pass


class NotPrime(CacError):
    pass


class NotPrimitive(CacError):
    pass


class NotASubgroupOf(CacError):
    pass


class DegenerateCodeword(CacError):
    pass


class NotExceptional(CacError):
    pass


class HeterogeneousCode(CacError):
    pass


class NotACac(CacError):
    """A code failed pairwise difference-set disjointness."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedWeight(CacError):
    pass


class ParamMismatch(CacError):
    pass


class SdrConditionFailed(CacError):
    """The required system of distinct representatives does not exist.

    Carries the first offending coset (zero or several representatives).
    """

    def __init__(self, message, coset=None):
        super().__init__(message)
        self.coset = coset


class ConditionNotSatisfied(CacError):
    """No cyclic subgroup witness for the requested modulus was found."""

    def __init__(self, message, modulus=None):
        super().__init__(message)
        self.modulus = modulus


class InputNotTight(CacError):
    pass


class InputNotOptimal(CacError):
    pass


class LengthsNotCoprimePrimes(CacError):
    pass


class DuplicateAssignment(CacError):
    pass


class BudgetExceeded(CacError):
    """Search or enumeration ran out of budget.

    best carries the incumbent (a lower bound, never exact) when the
    search got far enough to have one.
    """

    def __init__(self, message, best=None, size=0):
        super().__init__(message)
        self.best = best
        self.size = size
        self.exact = False
