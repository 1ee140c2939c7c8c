# ============================================
# EVENTSYNC
# Exceptions
# ============================================

"""
Application-specific exceptions.

Every exception carries an error code and the process exit status the
command-line harness reports for it (see utils.constants).
"""

from typing import Any, Optional

from eventsync.utils.constants import ExitCode


class AppException(Exception):
    """Base exception for application-specific errors."""

    def __init__(
        self,
        message: str,
        error_code: str = "APP_ERROR",
        exit_code: int = ExitCode.FAILURE,
        details: Optional[dict] = None
    ):
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class ProgramSyntaxError(AppException):
    """Malformed select-program text."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(
            message=f"{message} at position {position}",
            error_code="PARSE_ERROR",
            exit_code=ExitCode.PARSE_ERROR,
            details={"position": position}
        )


class StateBoundExceeded(AppException):
    """Exploration reached the state bound; carries the partial graph."""

    def __init__(self, bound: int, partial: Any):
        self.bound = bound
        self.partial = partial
        super().__init__(
            message=f"State bound of {bound} exceeded",
            error_code="STATE_BOUND",
            exit_code=ExitCode.STATE_BOUND,
            details={"bound": bound}
        )


class InvariantViolationError(AppException):
    """A machine state broke the protocol invariants."""

    def __init__(self, violations: list):
        self.violations = list(violations)
        super().__init__(
            message="Invariant violated: " + "; ".join(str(v) for v in self.violations),
            error_code="INVARIANT_VIOLATION",
            exit_code=ExitCode.FAILURE,
            details={"violations": [str(v) for v in self.violations]}
        )


class ScenarioTimeoutError(AppException):
    """A live scenario did not finish within its wall-clock budget."""

    def __init__(self, message: str = "Scenario timed out"):
        super().__init__(
            message=message,
            error_code="TIMEOUT",
            exit_code=ExitCode.FAILURE
        )


class ConfigurationError(AppException):
    """Invalid command-line or environment configuration."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(
            message=message,
            error_code="CONFIG_ERROR",
            exit_code=ExitCode.PARSE_ERROR,
            details=details
        )
