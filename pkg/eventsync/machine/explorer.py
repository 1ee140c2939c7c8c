# ============================================
# EVENTSYNC
# State-Space Exploration
# ============================================

"""
Bounded breadth-first exploration of the abstract machine.

Handles:
- Building the reach graph of a state (canonical states as nodes)
- Exporting the graph as text
- Auditing a graph: invariants, their preservation, channel liveness
  and denotation growth
"""

import hashlib
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from eventsync.config import settings
from eventsync.errors import StateBoundExceeded
from eventsync.machine.invariants import Violation, check_invariants
from eventsync.machine.rules import machine_step
from eventsync.machine.state import canonicalize
from eventsync.models.machine import ChanFree, Denotation, MachineState, PointBound, RuleLabel
from eventsync.utils.constants import STATE_HASH_WIDTH

logger = logging.getLogger(__name__)


def state_hash(state: MachineState) -> str:
    """Short stable digest of a (canonical) state."""
    text = repr((state.subs, state.table))
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:STATE_HASH_WIDTH]


# ============================================
# REACH GRAPH
# ============================================

class ReachGraph:
    """
    Reachable canonical states with rule-labeled edges.

    Attributes:
        initial: Canonical initial state
        graph: networkx multigraph; edge keys are RuleLabels
        complete: False for the partial graph of an aborted exploration
    """

    def __init__(self, initial: MachineState):
        self.initial = initial
        self.graph = nx.MultiDiGraph()
        self.graph.add_node(initial)
        self.expanded: Set[MachineState] = set()
        self.complete = False

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, state: MachineState) -> bool:
        return state in self.graph

    @property
    def states(self) -> List[MachineState]:
        return list(self.graph.nodes)

    @property
    def edges(self) -> List[Tuple[MachineState, RuleLabel, MachineState]]:
        return [(u, label, v) for u, v, label in self.graph.edges(keys=True)]

    def successors(self, state: MachineState) -> Iterable[MachineState]:
        return self.graph.successors(state)

    def predecessors(self, state: MachineState) -> Iterable[MachineState]:
        return self.graph.predecessors(state)

    @property
    def terminals(self) -> List[MachineState]:
        """Expanded states without successors."""
        return [s for s in self.expanded if self.graph.out_degree(s) == 0]

    def terminal_denotations(self) -> Set[Denotation]:
        return {s.denotation() for s in self.terminals}

    def backward_closure(self, targets: Iterable[MachineState]) -> Set[MachineState]:
        """States that reach some target in zero or more steps."""
        seen = set(targets)
        stack = list(seen)
        while stack:
            state = stack.pop()
            for pred in self.graph.predecessors(state):
                if pred not in seen:
                    seen.add(pred)
                    stack.append(pred)
        return seen

    def strict_predecessors(self, targets: Iterable[MachineState]) -> Set[MachineState]:
        """States that reach some target in one or more steps."""
        closure = self.backward_closure(targets)
        return {pred for state in closure for pred in self.graph.predecessors(state)}


def explore(initial: MachineState, max_states: Optional[int] = None) -> ReachGraph:
    """
    Explore every state reachable from `initial`.

    Args:
        initial: Start state (canonicalized before use)
        max_states: Bound on distinct states; defaults to settings.max_states

    Returns:
        ReachGraph: Complete reach graph

    Raises:
        StateBoundExceeded: Bound hit; the exception carries the partial graph
        ValueError: If max_states is not positive
    """
    bound = settings.max_states if max_states is None else max_states
    if bound <= 0:
        raise ValueError("max_states must be > 0")

    start = canonicalize(initial)
    reach = ReachGraph(start)
    frontier = deque([start])

    while frontier:
        state = frontier.popleft()
        for label, successor in machine_step(state):
            target = canonicalize(successor)
            if target not in reach:
                if len(reach) >= bound:
                    logger.warning(f"State bound {bound} exceeded after {len(reach.expanded)} expansions")
                    raise StateBoundExceeded(bound, reach)
                reach.graph.add_node(target)
                frontier.append(target)
            reach.graph.add_edge(state, target, key=label)
        reach.expanded.add(state)

    reach.complete = True
    logger.debug(
        f"Explored {len(reach)} states, {reach.graph.number_of_edges()} edges, "
        f"{len(reach.terminals)} terminal"
    )
    return reach


# ============================================
# EXPORT
# ============================================

def export_graph(reach: ReachGraph) -> str:
    """
    Line-oriented text form of a reach graph.

    Format:
        initial <hash>
        <hash> -[<RULE>]-> <hash>         (one line per edge)
        terminal <hash> <denotation>      (one line per terminal state)
    """
    names: Dict[MachineState, str] = {s: state_hash(s) for s in reach.states}
    lines = [f"initial {names[reach.initial]}"]
    lines.extend(sorted(
        f"{names[u]} -[{label.value}]-> {names[v]}" for u, label, v in reach.edges
    ))
    lines.extend(sorted(
        f"terminal {names[s]} {s.denotation()}" for s in reach.terminals
    ))
    return "\n".join(lines) + "\n"


# ============================================
# AUDIT
# ============================================

@dataclass
class GraphAudit:
    """Outcome of auditing a reach graph."""

    states_checked: int = 0
    edges_checked: int = 0
    invariant_violations: Dict[str, List[Violation]] = field(default_factory=dict)
    preservation_failures: List[str] = field(default_factory=list)
    liveness_failures: List[str] = field(default_factory=list)
    growth_failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.invariant_violations
            or self.preservation_failures
            or self.liveness_failures
            or self.growth_failures
        )


def _bound_channels(state: MachineState) -> Set[str]:
    """Channels with both an unmatched input and an unmatched output point."""
    inputs, outputs = set(), set()
    for sub in state.subs:
        if isinstance(sub, PointBound):
            (outputs if sub.action.is_output else inputs).add(sub.action.channel)
    return inputs & outputs


def _growth_ok(label: RuleLabel, before: Denotation, after: Denotation) -> bool:
    if label is not RuleLabel.IV_I:
        return before == after
    added = after.counts() - before.counts()
    return sum(added.values()) == 1 and not (before.counts() - after.counts())


def check_graph(reach: ReachGraph) -> GraphAudit:
    """
    Audit an explored graph.

    Checks that every state is well-formed, every edge keeps a well-formed
    state well-formed, every channel with two complementary unmatched
    points can become free again, and only rule IV.i changes the
    denotation (by exactly one action).
    """
    audit = GraphAudit()
    valid: Dict[MachineState, bool] = {}

    for state in reach.states:
        violations = check_invariants(state)
        valid[state] = not violations
        if violations:
            audit.invariant_violations[state_hash(state)] = violations
        audit.states_checked += 1

    for u, label, v in reach.edges:
        audit.edges_checked += 1
        edge = f"{state_hash(u)} -[{label.value}]-> {state_hash(v)}"
        if valid[u] and not valid[v]:
            audit.preservation_failures.append(edge)
        if not _growth_ok(label, u.denotation(), v.denotation()):
            audit.growth_failures.append(edge)

    for channel in sorted(reach.initial.channels):
        free_states = [s for s in reach.states if s.has(ChanFree(channel))]
        can_free = reach.backward_closure(free_states)
        for state in reach.states:
            if valid[state] and channel in _bound_channels(state) and state not in can_free:
                audit.liveness_failures.append(f"{state_hash(state)} cannot free {channel}")

    if not audit.ok:
        logger.warning(
            f"Graph audit failed: {len(audit.invariant_violations)} malformed states, "
            f"{len(audit.preservation_failures)} preservation, "
            f"{len(audit.liveness_failures)} liveness, {len(audit.growth_failures)} growth"
        )
    return audit
