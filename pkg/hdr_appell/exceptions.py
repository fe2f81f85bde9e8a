"""
Exception classes for the hdr-appell library.
"""


class HdrAppellError(Exception):
    """Base exception for all hdr-appell errors."""

    exit_code = 3

    def __init__(self, message, exit_code=None, detail=None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.detail = detail


class DomainError(HdrAppellError, ValueError):
    """Raised when an argument violates the precondition of an operation."""
    pass


class UsageError(HdrAppellError):
    """Raised when command-line flags or a job specification are invalid."""

    exit_code = 2


class ConfigurationError(HdrAppellError):
    """Raised when the client configuration or environment is invalid."""

    exit_code = 2


class VerificationError(HdrAppellError):
    """Raised when a verification suite reports failures."""

    exit_code = 1


class InvariantError(HdrAppellError):
    """Raised when a constructed object breaks an internal invariant."""
    pass
