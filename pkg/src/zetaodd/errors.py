"""Exception types shared across the package."""


class ZetaOddError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ZetaOddError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterRangeError(ZetaOddError, ValueError):
    """An atom or sequence parameter exceeds the supported integer range."""


class UnknownIdentityError(ZetaOddError, KeyError):
    """An identity id is not present in the catalog."""


class UnsupportedAtomError(ZetaOddError, ValueError):
    """A symbolic atom has no numeric evaluation rule."""
