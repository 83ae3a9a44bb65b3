"""Exception hierarchy.

Class names double as the error names the CLI prints, so they follow the
vocabulary of the construction rather than the usual ``*Error`` suffix.
"""


class EGQLDPCError(Exception):
    """Base class for all errors raised by this package."""


# finite field
class NotPrime(EGQLDPCError, ValueError):
    pass


class DegreeOutOfRange(EGQLDPCError, ValueError):
    pass


class ElementOutOfRange(EGQLDPCError, ValueError):
    pass


class ZeroInverse(EGQLDPCError, ZeroDivisionError):
    pass


# geometry
class CoincidentPoints(EGQLDPCError, ValueError):
    pass


# GF(2) linear algebra
class RowCountMismatch(EGQLDPCError, ValueError):
    pass


class DimensionMismatch(EGQLDPCError, ValueError):
    pass


class PairBudgetExceeded(EGQLDPCError, RuntimeError):
    pass


# code construction
class InvalidClassIndex(EGQLDPCError, ValueError):
    pass


class UnsupportedGeometry(EGQLDPCError, ValueError):
    """Raised when q**m exceeds the configured size cap."""


class NonpositiveDimension(EGQLDPCError, ValueError):
    pass


# analysis
class CapExceeded(EGQLDPCError, RuntimeError):
    pass


# io
class MalformedAlist(EGQLDPCError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class MalformedMatrixMarket(EGQLDPCError, ValueError):
    pass
