# ============================================
# EVENTSYNC
# Report Formatting
# ============================================

"""
Line-oriented rendering of report models.

Each field becomes one `key: value` line, in field order. Nested models
use dotted keys; lists of models carrying a `name` are keyed by that name:

    scenarios.rendezvous.status: pass

Lists of scalars are joined with single spaces.
"""

from typing import Any, Iterator, List

from pydantic import BaseModel


def format_value(value: Any) -> str:
    """
    Format a scalar for a report line.

    Example:
        >>> format_value(True)
        "true"
    """
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(item) for item in value)
    return str(value)


def _lines(prefix: str, data: Any) -> Iterator[str]:
    if isinstance(data, dict):
        for key, value in data.items():
            yield from _lines(f"{prefix}.{key}" if prefix else key, value)
    elif isinstance(data, list) and data and all(isinstance(i, dict) and "name" in i for i in data):
        for item in data:
            rest = {k: v for k, v in item.items() if k != "name"}
            yield from _lines(f"{prefix}.{item['name']}", rest)
    else:
        yield f"{prefix}: {format_value(data)}"


def report_lines(report: BaseModel) -> List[str]:
    """Flatten a report model into `key: value` lines."""
    return list(_lines("", report.model_dump()))


def render_report(report: BaseModel) -> str:
    """Render a report model as newline-terminated `key: value` text."""
    return "\n".join(report_lines(report)) + "\n"
