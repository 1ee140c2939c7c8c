# ============================================
# EVENTSYNC
# Application Constants
# ============================================

"""
Central location for constants shared by the library, the model checker
and the command-line harness.
"""

from enum import IntEnum
from typing import List


# ============================================
# EXIT CODES
# ============================================

class ExitCode(IntEnum):
    """Process exit statuses; stable contract of the command line."""

    OK = 0
    FAILURE = 1        # verdict failure, scenario failure, timeout
    PARSE_ERROR = 2    # malformed program or configuration
    STATE_BOUND = 3    # exploration bound exceeded


# ============================================
# SUBCOMMANDS
# ============================================

class Subcommand:
    """Subcommand names."""

    MODELCHECK = "modelcheck"
    DEMO = "demo"
    STRESS = "stress"


SUBCOMMANDS: List[str] = [Subcommand.MODELCHECK, Subcommand.DEMO, Subcommand.STRESS]


# ============================================
# STRESS WORKLOADS
# ============================================

class StressMode:
    """Shapes of generated stress systems."""

    PLAIN = "plain"     # send/accept pairs
    CHOOSE = "choose"   # both parties inside choose


STRESS_MODES: List[str] = [StressMode.PLAIN, StressMode.CHOOSE]


# ============================================
# DSL
# ============================================

# Output marker in program text and printed denotations
OUTPUT_MARKER: str = "!"

# Keyword introducing a choice of actions
SELECT_KEYWORD: str = "select"

# Width of the short state hashes used in exported graphs
STATE_HASH_WIDTH: int = 12


# ============================================
# DEMO SCENARIOS
# ============================================

DEMO_SCENARIOS: List[str] = [
    "rendezvous",
    "symmetric_choose",
    "wrapabort",
    "guard_counting",
    "guarded_receive",
]


# ============================================
# VERDICTS
# ============================================

class Verdict:
    """Status values printed in reports."""

    PASS = "pass"
    FAIL = "fail"
    TIMEOUT = "timeout"


VERDICTS: List[str] = [Verdict.PASS, Verdict.FAIL, Verdict.TIMEOUT]
