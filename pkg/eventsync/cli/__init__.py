# ============================================
# EVENTSYNC
# Command-Line Interface
# ============================================

"""
Command-line harness.

This package contains:
- modelcheck: Model check a select program
- demo: Scripted scenarios against the live library
- stress: Randomized live workloads
- error_handlers: Exception to exit-status mapping

Reports go to stdout as `key: value` lines; logs and errors go to stderr.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from eventsync.cli.demo import cmd_demo
from eventsync.cli.error_handlers import handle_errors
from eventsync.cli.modelcheck import cmd_modelcheck
from eventsync.cli.stress import cmd_stress
from eventsync.config import settings
from eventsync.schemas.cli import CliConfig
from eventsync.utils.constants import STRESS_MODES, StressMode, Subcommand

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    Subcommand.MODELCHECK: cmd_modelcheck,
    Subcommand.DEMO: cmd_demo,
    Subcommand.STRESS: cmd_stress,
}


# ============================================
# PARSER
# ============================================

def build_parser() -> argparse.ArgumentParser:
    """Assemble the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="eventsync",
        description=f"{settings.app_name} {settings.app_version}: first-class synchronous events"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only warnings and errors")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    modelcheck = sub.add_parser(Subcommand.MODELCHECK, help="Model check a select program")
    modelcheck.add_argument(
        "source",
        nargs="?",
        default=None,
        help="Program file, or '-' for stdin (default: stdin)"
    )
    modelcheck.add_argument("-e", "--expr", default=None, help="Inline program text")
    modelcheck.add_argument(
        "--max-states",
        type=int,
        default=settings.max_states,
        help=f"Exploration bound (default: {settings.max_states})"
    )
    modelcheck.add_argument("--graph", dest="graph_path", default=None, help="Write the reach graph to FILE")

    demo = sub.add_parser(Subcommand.DEMO, help="Run scripted library scenarios")
    demo.add_argument(
        "--timeout",
        dest="timeout_ms",
        type=int,
        default=settings.timeout_ms,
        help=f"Budget per scenario in ms (default: {settings.timeout_ms})"
    )
    demo.add_argument("--seed", type=int, default=settings.seed, help="Scenario order seed")

    stress = sub.add_parser(Subcommand.STRESS, help="Run a randomized live workload")
    stress.add_argument(
        "--tasks",
        type=int,
        default=settings.stress_tasks,
        help=f"Syncing tasks, even (default: {settings.stress_tasks})"
    )
    stress.add_argument(
        "--channels",
        type=int,
        default=settings.stress_channels,
        help=f"Channels (default: {settings.stress_channels})"
    )
    stress.add_argument(
        "--timeout",
        dest="timeout_ms",
        type=int,
        default=settings.stress_timeout_ms,
        help=f"Budget in ms (default: {settings.stress_timeout_ms})"
    )
    stress.add_argument("--seed", type=int, default=settings.seed, help="Generator seed")
    stress.add_argument("--guarded", action="store_true", help="Guarded channels with is-even predicates")
    stress.add_argument("--mode", choices=STRESS_MODES, default=StressMode.PLAIN, help="Workload shape")

    return parser


# ============================================
# LOGGING
# ============================================

def configure_logging(verbosity: int = 0) -> None:
    """
    Configure root logging on stderr.

    DEBUG when settings.debug or verbosity > 0, WARNING when verbosity < 0,
    INFO otherwise.
    """
    if verbosity > 0 or settings.debug:
        level = logging.DEBUG
    elif verbosity < 0:
        level = logging.WARNING
    else:
        level = logging.INFO

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


# ============================================
# ENTRY POINT
# ============================================

def config_from_args(args: argparse.Namespace) -> CliConfig:
    """Validated configuration for parsed arguments."""
    values = {k: v for k, v in vars(args).items() if k not in ("verbose", "quiet")}
    values["verbosity"] = 1 if args.verbose else (-1 if args.quiet else 0)
    return CliConfig(**values)


@handle_errors
def run_command(args: argparse.Namespace) -> int:
    """Validate arguments and dispatch to the command."""
    cfg = config_from_args(args)
    logger.debug(f"Running {cfg.subcommand} with {cfg.model_dump(exclude_none=True)}")
    return int(COMMANDS[cfg.subcommand](cfg))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv` and run the selected command.

    Returns:
        int: Process exit status (see utils.constants.ExitCode)
    """
    args = build_parser().parse_args(argv)
    configure_logging(1 if args.verbose else (-1 if args.quiet else 0))
    return run_command(args)


__all__ = [
    "build_parser",
    "configure_logging",
    "config_from_args",
    "main",
    "run_command",
]
