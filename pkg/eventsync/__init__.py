# ============================================
# EVENTSYNC
# Package Initialization
# ============================================

"""
First-class synchronous events built from single-slot cells, with an
executable abstract machine and model checker for the protocol.

This package contains:
- cell: Single-slot blocking cells
- events: Channels, events, combinators and sync
- guarded: Channels with predicate-carrying receives
- progdsl: Text form of select-programs
- machine: Abstract machine, exploration and correctness check
- cli: Command-line harness (modelcheck, demo, stress)
"""

from eventsync.config import settings
from eventsync.cell import Cell, new_cell
from eventsync.events import (
    Channel,
    Event,
    SyncTrace,
    accept,
    choose,
    guard,
    new,
    receive,
    select,
    send,
    sync,
    sync_traced,
    transmit,
    wrap,
    wrapabort,
)
from eventsync.progdsl import format_program, parse_program

__version__ = settings.app_version

__all__ = [
    "__version__",
    # Cells
    "Cell",
    "new_cell",
    # Events
    "Channel",
    "Event",
    "SyncTrace",
    "accept",
    "choose",
    "guard",
    "new",
    "receive",
    "select",
    "send",
    "sync",
    "sync_traced",
    "transmit",
    "wrap",
    "wrapabort",
    # Programs
    "format_program",
    "parse_program",
]
