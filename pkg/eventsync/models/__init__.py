# ============================================
# EVENTSYNC
# Models Package Initialization
# ============================================

"""
Domain value types.

This package contains:
- program: Source language (actions, select, programs)
- machine: Abstract machine states, sub-states and denotations
"""

from eventsync.models.program import Action, Polarity, Program, Select, SourceProc
from eventsync.models.machine import (
    CandidateP,
    ChanFree,
    ChanMatch,
    Denotation,
    DoneS,
    MachineState,
    PointBound,
    PointId,
    Rejected,
    Released,
    RetryS,
    RuleLabel,
    Selected,
    SubState,
    SyncClosed,
    SyncEntry,
    SyncId,
    SyncOpen,
)

__all__ = [
    # Source language
    "Action",
    "Polarity",
    "Program",
    "Select",
    "SourceProc",
    # Machine
    "CandidateP",
    "ChanFree",
    "ChanMatch",
    "Denotation",
    "DoneS",
    "MachineState",
    "PointBound",
    "PointId",
    "Rejected",
    "Released",
    "RetryS",
    "RuleLabel",
    "Selected",
    "SubState",
    "SyncClosed",
    "SyncEntry",
    "SyncId",
    "SyncOpen",
]
