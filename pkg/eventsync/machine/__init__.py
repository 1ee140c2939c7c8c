# ============================================
# EVENTSYNC
# Machine Package Initialization
# ============================================

"""
Executable abstract machine for the synchronization protocol.

This package contains:
- state: compilation, denotations, canonical renaming
- rules: program reduction and machine rules I-IV.ii
- invariants: well-formedness conditions
- explorer: bounded exploration, export and graph audits
- bisimulation: program/machine correctness check
- families: exhaustive small-program generation
"""

from eventsync.machine.state import canonicalize, compile_program, denote_program, denote_state
from eventsync.machine.invariants import Violation, check_invariants
from eventsync.machine.rules import machine_step, program_step
from eventsync.machine.explorer import (
    GraphAudit,
    ReachGraph,
    check_graph,
    explore,
    export_graph,
    state_hash,
)
from eventsync.machine.bisimulation import BisimReport, program_graph, verify_theorem
from eventsync.machine.families import enumerate_programs

__all__ = [
    # State
    "canonicalize",
    "compile_program",
    "denote_program",
    "denote_state",
    # Invariants
    "Violation",
    "check_invariants",
    # Rules
    "machine_step",
    "program_step",
    # Exploration
    "GraphAudit",
    "ReachGraph",
    "check_graph",
    "explore",
    "export_graph",
    "state_hash",
    # Correctness
    "BisimReport",
    "program_graph",
    "verify_theorem",
    # Families
    "enumerate_programs",
]
