# ============================================
# EVENTSYNC
# Demo Command
# ============================================

"""
`demo [--timeout MS] [--seed N]`
"""

import sys

from eventsync.schemas.cli import CliConfig
from eventsync.services.demo_service import DemoService
from eventsync.utils.constants import ExitCode, Verdict
from eventsync.utils.formatting import render_report


def cmd_demo(cfg: CliConfig) -> int:
    """Run the library scenarios; exit 1 if any failed or timed out."""
    report = DemoService.run(cfg.timeout_ms, cfg.seed)
    sys.stdout.write(render_report(report))
    return ExitCode.OK if report.verdict == Verdict.PASS else ExitCode.FAILURE
