"""Exception types shared across the package.

Input-shaped problems derive from ValueError so callers can catch broadly;
InconsistencyError marks an internal arithmetic fault (a bug, never bad
input) and maps to a distinct CLI exit code.
"""


class MinertiaError(Exception):
    """Base class for all package-specific errors."""


class NotHermitianError(MinertiaError, ValueError):
    """Matrix input violates conjugate symmetry."""


class SingularTransformError(MinertiaError, ValueError):
    """Congruence transform matrix has determinant zero."""


class NotProjectivePointError(MinertiaError, ValueError):
    """The zero matrix does not define a projective point."""


class UnsupportedSizeError(MinertiaError, ValueError):
    """Operation is only defined for large enough matrices."""


class HypothesisNotMetError(MinertiaError, ValueError):
    """Numeric hypothesis of a formula is not satisfied by the input."""


class InconsistencyError(MinertiaError, RuntimeError):
    """Internal cross-check failed; indicates an arithmetic bug."""
