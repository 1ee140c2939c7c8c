# ============================================
# EVENTSYNC
# Schemas Package Initialization
# ============================================

"""
Pydantic schemas for configuration and reports.

This package contains:
- cli: Command-line configuration
- report: Model-check, demo and stress reports
- scenario: Demo scenario results
"""

from eventsync.schemas.cli import CliConfig
from eventsync.schemas.scenario import ScenarioResult
from eventsync.schemas.report import DemoReport, ModelCheckReport, StressReport

__all__ = [
    "CliConfig",
    "ScenarioResult",
    "DemoReport",
    "ModelCheckReport",
    "StressReport",
]
