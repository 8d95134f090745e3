"""
SemiPrim - Errors
Exception hierarchy shared by every module.
"""


class SemiPrimError(Exception):
    """Base class for all library errors."""


class DegreeMismatchError(SemiPrimError, ValueError):
    def __init__(self, left, right):
        super().__init__(f"degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PointOutOfRangeError(SemiPrimError, ValueError):
    def __init__(self, point, degree):
        # points are reported 1-based, as in every text format
        super().__init__(f"point {point + 1} outside 1..{degree}")
        self.point = point
        self.degree = degree


class CensusCapExceeded(SemiPrimError):
    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds the census cap {cap}")
        self.order = order
        self.cap = cap


class IndexCapExceeded(SemiPrimError):
    def __init__(self, index, cap):
        super().__init__(f"coset index {index} exceeds the index cap {cap}")
        self.index = index
        self.cap = cap


class TimeBudgetExceeded(SemiPrimError):
    def __init__(self, what, budget):
        super().__init__(f"{what} exceeded the time budget of {budget}s")
        self.budget = budget


class NotSubgroupError(SemiPrimError):
    pass


class NotNormalError(SemiPrimError):
    pass


class PreconditionError(SemiPrimError):
    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [message])


class TrilemmaInapplicable(PreconditionError):
    pass


class ClassificationError(SemiPrimError):
    """A semiprimitive cover matched none of the classified outcomes."""


class ExprSyntaxError(SemiPrimError, ValueError):
    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at offset {offset})")
        self.reason = message
        self.offset = offset


class ArityError(ExprSyntaxError):
    pass


class UnsupportedFieldError(ExprSyntaxError):
    pass


class CertificateError(SemiPrimError):
    def __init__(self, name, line, expected=None, actual=None):
        detail = f"{line}: expected {expected}, got {actual}" if expected is not None else line
        super().__init__(f"atlas entry {name} failed its certificate: {detail}")
        self.name = name
        self.line = line
        self.expected = expected
        self.actual = actual
