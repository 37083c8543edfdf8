"""Exception hierarchy for the aprings package."""


class ApringsError(Exception):
    """Base class for package-specific failures."""


class BoundExceeded(ApringsError):
    """A configured resource bound would be exceeded."""


class OrderBoundExceeded(BoundExceeded):
    """Group closure grew past the configured order bound."""


class CarrierBoundExceeded(BoundExceeded):
    """Finite-quotient carrier larger than the configured bound."""


class LengthBoundExceeded(BoundExceeded):
    """Length search exhausted its radius without reaching the target."""


class UnsupportedOrder(BoundExceeded):
    """Cyclotomic order outside the supported degree range."""


class NonIntegerCoefficient(ApringsError):
    """A polynomial expansion produced a non-integer coefficient."""


class NonIntegralPullback(ApringsError):
    """A mark vector has no integral preimage in the Burnside basis."""


class R2Violation(ApringsError):
    """A declared generator is not a root of the generating polynomial."""


class ExponentMismatch(ApringsError):
    """Character target order is not a multiple of the group exponent."""


class UnsupportedModel(ApringsError):
    """The requested computation has no strategy for this ring model."""


class ExpressionError(ApringsError):
    """Malformed element expression."""
