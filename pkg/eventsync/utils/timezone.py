# ============================================
# EVENTSYNC
# Timezone Utilities
# ============================================

"""
Timestamps for reports.

All report timestamps use the configured timezone (UTC by default).
"""

from datetime import datetime

import pytz

from eventsync.config import settings


# ============================================
# TIMEZONE SETUP
# ============================================

REPORT_TIMEZONE = pytz.timezone(settings.timezone)


def get_current_time() -> datetime:
    """
    Get current time in the report timezone.

    Returns:
        datetime: Aware datetime
    """
    return datetime.now(REPORT_TIMEZONE)


def format_iso(dt: datetime) -> str:
    """ISO 8601 to the second, with offset: "2024-01-15T14:30:00+00:00"."""
    return dt.isoformat(timespec="seconds")


def format_duration_ms(seconds: float) -> str:
    """
    Format an elapsed duration as milliseconds with two decimals.

    Example:
        >>> format_duration_ms(0.01234)
        "12.34"
    """
    return f"{seconds * 1000:.2f}"
