"""Exception hierarchy shared by every module of the package."""


class TripError(Exception):
    """Base class for all package errors."""


class ParseError(TripError, ValueError):
    """Text could not be parsed by one of the input grammars."""


class NonUnimodular(TripError, ArithmeticError):
    """An integer inverse was requested for a matrix with |det| != 1."""


class ZeroPolynomial(TripError, ValueError):
    """An operation needs a nonzero polynomial."""


class MixedFields(TripError, TypeError):
    """Arithmetic between elements of different number fields."""


class DomainError(TripError, ValueError):
    """Base for inputs outside the domain of a map."""


class PointOutsideDomain(DomainError):
    """The point is not in the half-open triangle or simplex."""


class ZeroLeadingCoordinate(DomainError):
    """A projective point with zero first coordinate cannot be normalized."""


class DegenerateTriangle(DomainError):
    """The vertex matrix is singular."""


class PointOutsideRegion(DomainError):
    """A checked map application was given a point outside the region."""


class NoRuleMatched(DomainError):
    """No branch of a combo step accepted the point."""


class MalformedPrefix(TripError, ValueError):
    """A tree prefix that does not end a 1^k 0 block."""


class DimensionTooSmall(TripError, ValueError):
    """Simplex maps need matrix dimension at least 3."""


class DimensionMismatch(TripError, ValueError):
    """Two objects of different dimensions were combined."""


class RepeatedEigenvalueUnresolved(TripError):
    """An eigenspace has dimension above one.

    ``eigenvalue`` and ``basis`` describe the space that was found.
    """

    def __init__(self, message, eigenvalue=None, basis=()):
        super().__init__(message)
        self.eigenvalue = eigenvalue
        self.basis = tuple(basis)


class NotReduced(TripError, ValueError):
    """Catalog lookups need a triple whose sigma is the identity."""


class PeriodNotDetected(TripError):
    """No exact recurrence was found; ``termination`` says why the search ended."""

    def __init__(self, message, termination=None, steps=0):
        super().__init__(message)
        self.termination = termination
        self.steps = steps


class DepthLimitExceeded(TripError, ValueError):
    """A rendering or enumeration depth above the configured cap."""
