"""Exceptions shared across the package."""

from .algebra.scalars import ParseError


class VerificationError(AssertionError):
    """A symbolic identity failed; ``residual`` holds the offending value."""

    def __init__(self, message: str, residual=None) -> None:
        super().__init__(message)
        self.residual = residual


__all__ = ["ParseError", "VerificationError"]
