"""Exception types shared across the package."""


class NahmForgeError(Exception):
    """Base class for all package-specific errors."""


class ZeroLeadingTerm(NahmForgeError):
    """Inversion of a series that is zero to its truncation order."""


class OrderTooLarge(NahmForgeError):
    """A comparison order exceeds the provable order of an operand."""


class Divergent(NahmForgeError):
    """An infinite product does not converge as a formal series."""


class NonSymmetric(NahmForgeError):
    """A*diag(d) is not symmetric."""


class NotPositiveDefinite(NahmForgeError):
    """A*diag(d) is not positive definite."""


class SingularMatrix(NahmForgeError):
    """Matrix inversion on a singular matrix."""


class NotIntegralLattice(NahmForgeError):
    """Series exponents do not form a nonnegative integer lattice."""


class WindowOverflow(NahmForgeError):
    """A z-Laurent factor violates the window growth precondition."""


class TailTooLarge(NahmForgeError):
    """A numeric evaluation cannot certify the requested tolerance."""


class UnknownId(NahmForgeError):
    """Lookup of an identity id that is not registered."""
