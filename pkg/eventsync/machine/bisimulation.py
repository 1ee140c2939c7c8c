# ============================================
# EVENTSYNC
# Correctness Check (Program vs. Machine)
# ============================================

"""
Checks that a program and its compiled machine state are related by the
largest relation satisfying:

- Correspondence: the state can reach a state whose denotation equals
  the program's.
- Safety: every machine step can be matched by zero or more program
  steps into a related pair.
- Progress: if the program can step, the state can make one or more steps
  into a pair related to some program successor.

The relation is computed by greatest-fixpoint refinement over the two
finite transition systems.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

import networkx as nx

from eventsync.machine.explorer import ReachGraph, explore
from eventsync.machine.rules import program_step
from eventsync.machine.state import compile_program, denote_program
from eventsync.models.machine import Denotation, MachineState, RuleLabel
from eventsync.models.program import Program

logger = logging.getLogger(__name__)


class Clause:
    """Clause names used in reports."""

    CORRESPONDENCE = "correspondence"
    SAFETY = "safety"
    PROGRESS = "progress"


@dataclass
class BisimReport:
    """
    Verdict of a correctness check.

    Attributes:
        program: Program text (normalized)
        holds: True iff the program and its compiled state are related
        correspondence / safety / progress: Per-clause verdicts for the
            initial pair; a clause fails when the pair was dropped for it
        failed_clause: First clause that dropped the initial pair
        program_states / machine_states / machine_edges: Graph sizes
        relation_size: Pairs in the final relation
        rounds: Refinement rounds until the fixpoint
        terminal_denotations: Denotations of terminal machine states
    """

    program: str
    holds: bool
    correspondence: bool
    safety: bool
    progress: bool
    failed_clause: Optional[str]
    program_states: int
    machine_states: int
    machine_edges: int
    relation_size: int
    rounds: int
    terminal_denotations: List[str] = field(default_factory=list)


# ============================================
# PROGRAM TRANSITION SYSTEM
# ============================================

def program_graph(program: Program) -> nx.DiGraph:
    """Closure of a (normalized) program under program_step, edges labeled SRC."""
    start = program.normalized()
    graph = nx.DiGraph()
    graph.add_node(start)
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for successor in program_step(current):
            if successor not in graph:
                graph.add_node(successor)
                frontier.append(successor)
            graph.add_edge(current, successor, rule=RuleLabel.SRC)
    return graph


# ============================================
# REFINEMENT
# ============================================

def _initial_relation(programs: nx.DiGraph, reach: ReachGraph) -> Dict[Program, Set[MachineState]]:
    """Pairs satisfying Correspondence."""
    by_denotation: Dict[Denotation, List[MachineState]] = {}
    for state in reach.states:
        by_denotation.setdefault(state.denotation(), []).append(state)

    closures: Dict[Denotation, Set[MachineState]] = {}
    relation = {}
    for program in programs.nodes:
        wanted = denote_program(program)
        if wanted not in closures:
            closures[wanted] = reach.backward_closure(by_denotation.get(wanted, []))
        relation[program] = set(closures[wanted])
    return relation


def _refine(
    programs: nx.DiGraph,
    reach: ReachGraph,
    relation: Dict[Program, Set[MachineState]],
    reasons: Dict[tuple, str],
) -> int:
    """Drop pairs violating Safety or Progress until nothing changes."""
    descendants = {p: nx.descendants(programs, p) | {p} for p in programs.nodes}
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for program in programs.nodes:
            related = relation[program]
            if not related:
                continue

            reachable = set().union(*(relation[p] for p in descendants[program]))
            unsafe = {
                state for state in related
                if any(succ not in reachable for succ in reach.successors(state))
            }

            stuck: Set[MachineState] = set()
            next_programs = list(programs.successors(program))
            if next_programs:
                targets = set().union(*(relation[p] for p in next_programs))
                can_progress = reach.strict_predecessors(targets)
                stuck = (related - unsafe) - can_progress

            for state in unsafe:
                reasons[(program, state)] = Clause.SAFETY
            for state in stuck:
                reasons[(program, state)] = Clause.PROGRESS
            if unsafe or stuck:
                relation[program] = related - unsafe - stuck
                changed = True
    return rounds


def verify_theorem(
    program: Program,
    max_states: Optional[int] = None,
    reach: Optional[ReachGraph] = None,
) -> BisimReport:
    """
    Check that `program` and its compiled state are related.

    Args:
        program: Program to check (small enough to explore exhaustively)
        max_states: Exploration bound; defaults to settings.max_states
        reach: Complete reach graph of the compiled program, if already explored

    Returns:
        BisimReport with per-clause verdicts

    Raises:
        StateBoundExceeded: If the machine graph exceeds the bound
    """
    programs = program_graph(program)
    if reach is None or not reach.complete:
        reach = explore(compile_program(program), max_states)
    start_program = program.normalized()
    start_state = reach.initial

    relation = _initial_relation(programs, reach)
    correspondence = start_state in relation[start_program]
    reasons: Dict[tuple, str] = {}
    rounds = _refine(programs, reach, relation, reasons)

    holds = start_state in relation[start_program]
    if not correspondence:
        failed = Clause.CORRESPONDENCE
    else:
        failed = reasons.get((start_program, start_state)) if not holds else None

    report = BisimReport(
        program=str(start_program),
        holds=holds,
        correspondence=correspondence,
        safety=failed != Clause.SAFETY,
        progress=failed != Clause.PROGRESS,
        failed_clause=failed,
        program_states=programs.number_of_nodes(),
        machine_states=len(reach),
        machine_edges=reach.graph.number_of_edges(),
        relation_size=sum(len(states) for states in relation.values()),
        rounds=rounds,
        terminal_denotations=sorted(str(d) for d in reach.terminal_denotations()),
    )
    logger.info(
        f"Checked {report.program}: holds={holds} "
        f"({report.program_states} program states, {report.machine_states} machine states)"
    )
    return report
