"""Exceptions raised by qgw operations."""

from typing import Optional


class QgwError(Exception):
    """Base class for every error raised on invalid input or violated preconditions."""


class DimensionMismatch(QgwError, ValueError):
    """Operands live in spaces of different dimension."""


class NotInvertible(QgwError):
    """Element (or matrix) has no two-sided inverse."""


class DegenerateFunctional(QgwError):
    """Gram matrix of a functional is singular."""


class IndexNotOne(QgwError):
    """Quasibasis of a functional does not multiply out to the unit."""


class DegenerateTrace(DegenerateFunctional):
    """Trace form of an extension is degenerate (inseparable input)."""


class NotLiftable(QgwError):
    """Canonical map of an extension is not bijective."""

    def __init__(self, message: str, deficit: int):
        super().__init__(message)
        self.deficit = deficit


class PrecisionExhausted(QgwError):
    """Numeric root reconstruction did not settle below the precision cap."""

    def __init__(self, message: str, unresolved: int):
        super().__init__(message)
        self.unresolved = unresolved


class InvalidPolynomial(QgwError, ValueError):
    """Polynomial cannot present a quotient algebra or number field."""


class NotInSubalgebra(QgwError):
    """Element does not lie in the required subalgebra."""


class NotGrouplike(QgwError):
    """Element fails the left grouplike test."""


class FactorizationError(QgwError):
    """Action does not factor through the universal weak Hopf algebra."""


class ConsistencyError(QgwError):
    """A derived identity that must hold for valid input failed."""


class DocumentError(QgwError):
    """Malformed input document."""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class UnknownFixture(QgwError, KeyError):
    """Fixture name not known to the fixture registry."""
