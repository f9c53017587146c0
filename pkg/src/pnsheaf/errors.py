"""Exception types shared across the package."""


class PnsheafError(Exception):
    """Base class for every error raised by this package."""


class InputError(PnsheafError):
    """Caller passed something malformed (CLI exit code 2)."""


class ParseError(InputError):
    """Expression or polynomial text could not be parsed.

    Carries the character position and the tokens that would have been
    accepted there.
    """

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected " + " | ".join(self.expected) + ")"
        super().__init__(detail)


class UnsupportedPlethysm(PnsheafError):
    """wedge/sym applied to a summand outside the supported classes (exit code 3)."""


class ScaleExceeded(PnsheafError):
    """Polynomial computation beyond the desk-scale guard (exit code 3)."""


class EulerViolation(InputError):
    """Coefficient vector fails the Euler relation; carries the residual."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"Euler relation violated, residual {residual}")


class ConsistencyError(PnsheafError):
    """An internal exact-arithmetic cross-check failed; indicates a bug."""
