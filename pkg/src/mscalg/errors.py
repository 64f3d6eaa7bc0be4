"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MscError(Exception):
    """Base class for all library errors."""


class ZeroInverse(MscError, ZeroDivisionError):
    pass


class ZeroPolynomialOverInfiniteField(MscError, ValueError):
    pass


class DimensionMismatch(MscError, ValueError):
    pass


class IndexOutOfRange(MscError, IndexError):
    pass


class SingularBasisChange(MscError, ValueError):
    pass


class BudgetExceeded(MscError):
    """An exhaustive search would visit more elements than allowed."""

    def __init__(self, needed: int, budget: int, what: str = "elements"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"needs {needed} {what}, budget is {budget}")


class NotFiniteField(MscError, ValueError):
    pass


class ValidationError(MscError, ValueError):
    """Malformed MSC / field / scalar input."""


class RankConditionFailed(MscError):
    pass


class AugmentedRankFailed(MscError):
    pass


class TraceConditionFailed(MscError):
    pass


class FirstRowZero(MscError):
    pass


class NotSimpleInput(MscError):
    pass


class SearchExhausted(MscError):
    pass


class ConstraintViolated(MscError, ValueError):
    def __init__(self, predicate: str):
        self.predicate = predicate
        super().__init__(f"constraint violated: {predicate}")


class CharMismatch(MscError, ValueError):
    pass
