"""Exception types shared across the package."""


class IsodistError(Exception):
    """Base class for all package errors."""


class InvalidDiscriminantError(IsodistError, ValueError):
    """Input is not a negative discriminant (< 0 and congruent to 0 or 1 mod 4)."""


class InvalidFormError(IsodistError, ValueError):
    """Binary quadratic form is not positive definite."""


class SingularCurveError(IsodistError, ValueError):
    """Weierstrass equation has vanishing discriminant 4a^3 + 27b^2 mod p."""


class NonSquarefreePolynomialError(IsodistError, ValueError):
    """Polynomial is not squarefree mod p (gcd(f, f') != 1)."""


class UnsupportedLevelError(IsodistError, ValueError):
    """No embedded modular polynomial for the requested isogeny degree."""


class UnsupportedDiscriminantError(IsodistError, ValueError):
    """Discriminant is outside the embedded Hilbert class polynomial table."""


class VerificationError(IsodistError, AssertionError):
    """A theorem-level consistency check failed; this is the falsification channel."""
