"""Exception types shared across the package."""


class HomcatError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(HomcatError):
    """A constructed object violates its defining identities.

    ``witness`` holds the offending data (e.g. a basis triple for a failed
    associativity check) so callers can report exactly what broke.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExhausted(HomcatError):
    """An iterative construction (resolution, window) hit its length cap."""

    def __init__(self, message, leftover=None):
        super().__init__(message)
        self.leftover = leftover


class GuardError(HomcatError):
    """A search-space guard refused the input (non-preset algebra, large field)."""
