# ============================================
# EVENTSYNC
# Modelcheck Command
# ============================================

"""
`modelcheck [--max-states N] [-e EXPR] [--graph FILE] [FILE|-]`

Reads a program from FILE, stdin (`-` or no argument) or `--expr`, model
checks it and prints the report to stdout.
"""

import logging
import sys

from eventsync.errors import ConfigurationError
from eventsync.schemas.cli import CliConfig
from eventsync.services.modelcheck_service import ModelCheckService
from eventsync.utils.constants import ExitCode, Verdict
from eventsync.utils.formatting import render_report

logger = logging.getLogger(__name__)


def read_program(cfg: CliConfig) -> str:
    """Program text from --expr, a file, or stdin."""
    if cfg.expr is not None:
        return cfg.expr
    if cfg.source in (None, "-"):
        return sys.stdin.read()
    try:
        with open(cfg.source, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ConfigurationError(f"Cannot read {cfg.source}: {exc.strerror}", {"file": cfg.source})


def cmd_modelcheck(cfg: CliConfig) -> int:
    """Run the model checker; exit 0 iff every check passes."""
    report = ModelCheckService.run(read_program(cfg), cfg.max_states, cfg.graph_path)
    sys.stdout.write(render_report(report))
    return ExitCode.OK if report.verdict == Verdict.PASS else ExitCode.FAILURE
