"""Exception types shared across the package."""


class PlanarDiracError(Exception):
    """Base class for all library-specific errors."""


class DomainError(PlanarDiracError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SupercriticalChargeError(DomainError):
    """Raised when alpha*Z >= |kappa|, so gamma_kappa would be imaginary."""


class NoBoundStateError(DomainError):
    """Raised for (n, kappa) combinations without a planar Dirac-Coulomb bound state.

    Channels with kappa >= +1/2 and n_r = 0 have identically vanishing radial
    functions and therefore no bound state.
    """


class NumericError(PlanarDiracError, RuntimeError):
    """A numerical procedure failed to converge or lost too much accuracy."""


class OverlapMismatchError(NumericError):
    """Quadrature and closed-form overlap integrals disagree beyond tolerance."""


class StateTrackingError(NumericError):
    """The variational eigenstate tracking became ambiguous."""
