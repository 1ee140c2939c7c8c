# ============================================
# EVENTSYNC
# Error Handlers
# ============================================

"""
Maps exceptions raised by commands to exit statuses.

Provides a consistent stderr format across all commands:

    error: <CODE>
    message: <text>
    <detail key>: <detail value>
"""

import functools
import logging
import sys
from typing import Callable, TextIO

from pydantic import ValidationError

from eventsync.errors import AppException
from eventsync.utils.constants import ExitCode
from eventsync.utils.formatting import format_value

logger = logging.getLogger(__name__)


def print_error(code: str, message: str, details: dict = None, stream: TextIO = None) -> None:
    """Write an error block to stderr."""
    stream = stream or sys.stderr
    print(f"error: {code}", file=stream)
    print(f"message: {message}", file=stream)
    for key, value in (details or {}).items():
        print(f"{key}: {format_value(value)}", file=stream)


def handle_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorate a command so every failure becomes an exit status.

    - AppException: its own error code and exit status
    - pydantic ValidationError: exit 2 with one line per invalid field
    - anything else: logged with traceback, exit 1
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except AppException as exc:
            logger.debug(f"{exc.error_code}: {exc.message}")
            print_error(exc.error_code, exc.message, exc.details)
            return int(exc.exit_code)
        except ValidationError as exc:
            details = {}
            for error in exc.errors():
                field = ".".join(str(loc) for loc in error["loc"]) or "config"
                details[field] = error["msg"]
            print_error("VALIDATION_ERROR", "Invalid configuration", details)
            return int(ExitCode.PARSE_ERROR)
        except Exception as exc:
            logger.error(f"Unhandled error: {exc}", exc_info=True)
            print_error("INTERNAL_ERROR", "An unexpected error occurred")
            return int(ExitCode.FAILURE)

    return wrapper
