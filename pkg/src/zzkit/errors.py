"""Exception types shared across the toolkit.

Everything derives from ValueError so callers that don't care about the
category can still catch the lot with one clause.
"""


class InvalidDimensionError(ValueError):
    """An extent is zero, negative, or otherwise unusable."""


class ShapeMismatchError(ValueError):
    """Grid shape does not match the scan order or companion grid."""


class DomainError(ValueError):
    """Input values outside the operation's domain (NaN, infinity)."""


class OversizeError(ValueError):
    """Input too large for a deliberately quadratic reference routine."""


class CorruptStreamError(ValueError):
    """Compressed stream failed validation; message names the stage."""


class FormatError(ValueError):
    """A file or byte buffer does not conform to its declared format."""
