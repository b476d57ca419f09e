"""
Custom exceptions for the workbench application layer.
"""


class WorkbenchError(Exception):
    """Base exception for workbench errors."""

    pass


class ConfigurationError(WorkbenchError):
    """Raised when there's a configuration error."""

    pass


class UsageError(WorkbenchError):
    """Raised for missing or contradictory command-line input."""

    pass


class VerificationFailure(WorkbenchError):
    """Raised when a verification suite reports failures."""

    def __init__(self, message: str, failures: list[str] | None = None):
        super().__init__(message)
        self.failures = failures or []
