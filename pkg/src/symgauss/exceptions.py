"""Exception types shared across the package (and both kernel backends)."""


class SymGaussError(ValueError):
    """Base class for domain errors raised by this package."""


class NotPositiveDefiniteError(SymGaussError):
    """A matrix square root / decomposition failed: input is not positive definite."""


class UnphysicalStateError(SymGaussError):
    """Parameters or a covariance matrix violate the uncertainty relation.

    Carries ``min_nu`` (smallest symplectic eigenvalue) when it could be
    computed, else ``nan``.
    """

    def __init__(self, message, min_nu=float("nan")):
        super().__init__(message)
        self.min_nu = min_nu


class InvalidInvariantsError(SymGaussError):
    """An invariant combination has no real spectrum (negative discriminant
    or inconsistent inputs)."""
