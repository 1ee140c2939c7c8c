# ============================================
# EVENTSYNC
# Stress Command
# ============================================

"""
`stress [--tasks N] [--channels N] [--timeout MS] [--seed N] [--guarded] [--mode plain|choose]`
"""

import sys

from eventsync.schemas.cli import CliConfig
from eventsync.services.stress_service import StressService
from eventsync.utils.constants import ExitCode, Verdict
from eventsync.utils.formatting import render_report


def cmd_stress(cfg: CliConfig) -> int:
    """Run one seeded stress workload; exit 1 on timeout or any failed check."""
    report = StressService.run(
        tasks=cfg.tasks,
        channels=cfg.channels,
        timeout_ms=cfg.timeout_ms,
        seed=cfg.seed,
        mode=cfg.mode,
        use_guard=cfg.guarded,
    )
    sys.stdout.write(render_report(report))
    return ExitCode.OK if report.verdict == Verdict.PASS else ExitCode.FAILURE
