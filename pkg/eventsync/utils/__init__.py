# ============================================
# EVENTSYNC
# Utils Package Initialization
# ============================================

"""
Utility functions and constants.

This package contains:
- constants: Exit codes, subcommands, labels and verdicts
- timezone: Report timestamps
- formatting: key: value report rendering
"""

from eventsync.utils.constants import (
    DEMO_SCENARIOS,
    STRESS_MODES,
    SUBCOMMANDS,
    VERDICTS,
    ExitCode,
    StressMode,
    Subcommand,
    Verdict,
)
from eventsync.utils.timezone import (
    format_duration_ms,
    format_iso,
    get_current_time,
)
from eventsync.utils.formatting import format_value, render_report, report_lines

__all__ = [
    # Constants
    "DEMO_SCENARIOS",
    "STRESS_MODES",
    "SUBCOMMANDS",
    "VERDICTS",
    "ExitCode",
    "StressMode",
    "Subcommand",
    "Verdict",
    # Timezone
    "format_duration_ms",
    "format_iso",
    "get_current_time",
    # Formatting
    "format_value",
    "render_report",
    "report_lines",
]
