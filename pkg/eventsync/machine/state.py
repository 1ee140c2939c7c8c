# ============================================
# EVENTSYNC
# Machine State Helpers
# ============================================

"""
Compilation, denotations and canonical renaming of machine states.

Handles:
- Compiling a program to its initial machine state
- Denotations of programs and states
- Multiset rewriting of sub-states
- Canonical forms up to point/synchronizer renaming
"""

import itertools
import logging
from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from eventsync.models.machine import (
    POINT_PHASES,
    ChanFree,
    ChanMatch,
    Denotation,
    MachineState,
    PointBound,
    PointId,
    Released,
    RetryS,
    SubState,
    SyncEntry,
    SyncClosed,
    SyncId,
    SyncOpen,
    sort_subs,
)
from eventsync.models.program import Action, Program

logger = logging.getLogger(__name__)


# ============================================
# COMPILATION
# ============================================

def compile_program(program: Program) -> MachineState:
    """
    Compile a program to its initial machine state.

    Every channel starts free. A bare action is already released; each
    select gets a fresh open synchronizer owning one fresh point per action.

    Example:
        >>> str(compile_program(parse_program("select(!z)")))
        "p0↦!z | ⊙z | □s0"
    """
    subs: List[SubState] = [ChanFree(c) for c in sorted(program.channels)]
    table: List[SyncEntry] = []
    next_point = 0

    for proc in program.procs:
        if isinstance(proc, Action):
            subs.append(Released(proc))
            continue

        sync = SyncId(len(table))
        bindings = []
        for action in proc.actions:
            point = PointId(next_point)
            next_point += 1
            bindings.append((point, action))
            subs.append(PointBound(point, action))
        subs.append(SyncOpen(sync))
        table.append(SyncEntry(sync, tuple(bindings)))

    return MachineState(
        subs=sort_subs(subs),
        table=tuple(table),
        channels=frozenset(program.channels),
        next_point=next_point,
    )


# ============================================
# DENOTATIONS
# ============================================

def denote_program(program: Program) -> Denotation:
    """Bare actions denote themselves; selects denote nothing."""
    return Denotation.of(p for p in program.procs if isinstance(p, Action))


def denote_state(state: MachineState) -> Denotation:
    """Released actions of the state."""
    return state.denotation()


# ============================================
# MULTISET REWRITING
# ============================================

def rewrite(
    state: MachineState,
    remove: Sequence[SubState],
    add: Sequence[SubState],
    table: Optional[Tuple[SyncEntry, ...]] = None,
    next_point: Optional[int] = None,
) -> MachineState:
    """
    Replace one occurrence of each `remove` sub-state by the `add` ones.

    Raises:
        ValueError: If some sub-state to remove is not present
    """
    counts = Counter(state.subs)
    for sub in remove:
        if counts[sub] <= 0:
            raise ValueError(f"Sub-state {sub} not present")
        counts[sub] -= 1

    return MachineState(
        subs=sort_subs(list(counts.elements()) + list(add)),
        table=state.table if table is None else table,
        channels=state.channels,
        next_point=state.next_point if next_point is None else next_point,
    )


# ============================================
# CANONICAL RENAMING
# ============================================

def _point_signatures(state: MachineState) -> Dict[PointId, tuple]:
    """Renaming-invariant description of every owned point."""
    phases = defaultdict(list)
    roles = defaultdict(list)
    for sub in state.subs:
        if isinstance(sub, POINT_PHASES):
            phases[sub.point].append(sub.KIND)
        elif isinstance(sub, ChanMatch):
            roles[sub.p].append((sub.channel, 0))
            roles[sub.q].append((sub.channel, 1))

    return {
        point: (action.sort_key, tuple(sorted(phases[point])), tuple(sorted(roles[point])))
        for entry in state.table
        for point, action in entry.bindings
    }


def _sync_signatures(state: MachineState, points: Dict[PointId, tuple]) -> Dict[SyncId, tuple]:
    status = Counter()
    for sub in state.subs:
        if isinstance(sub, (SyncOpen, SyncClosed, RetryS)):
            status[(sub.sync, sub.KIND)] += 1

    signatures = {}
    for entry in state.table:
        kinds = tuple(sorted((kind, n) for (s, kind), n in status.items() if s == entry.sync))
        signatures[entry.sync] = (kinds, tuple(sorted(points[p] for p in entry.points)))
    return signatures


def _grouped(items: Iterable, signature) -> List[List]:
    """Items grouped by signature, groups in signature order."""
    groups = defaultdict(list)
    for item in items:
        groups[signature(item)].append(item)
    return [groups[key] for key in sorted(groups)]


def _encode(state: MachineState, pm: dict, sm: dict) -> tuple:
    subs = tuple(sorted(sub.key(pm, sm) for sub in state.subs))
    table = tuple(sorted(
        (sm[entry.sync], tuple(sorted((pm[p], a.sort_key) for p, a in entry.bindings)))
        for entry in state.table
    ))
    return (subs, table)


def canonicalize(state: MachineState) -> MachineState:
    """
    Rename points and synchronizers to a canonical form.

    Two states get equal canonical forms iff they are identical up to a
    renaming of point and synchronizer ids. Candidate renamings number
    synchronizers by signature and points by synchronizer then signature;
    only members of equal-signature groups are permuted, and the least
    encoding wins. Fresh-point counters restart after the last point.
    """
    point_sig = _point_signatures(state)
    sync_sig = _sync_signatures(state, point_sig)

    sync_groups = _grouped(state.entries, sync_sig.__getitem__)
    point_groups = {
        entry.sync: _grouped(entry.points, point_sig.__getitem__)
        for entry in state.table
    }

    sync_choices = [list(itertools.permutations(group)) for group in sync_groups]
    point_choices = [
        list(itertools.permutations(group))
        for entry in state.table
        for group in point_groups[entry.sync]
    ]
    point_slots = [
        (entry.sync, index)
        for entry in state.table
        for index in range(len(point_groups[entry.sync]))
    ]

    best_key = None
    best_maps = None
    for sync_pick in itertools.product(*sync_choices):
        order = [s for group in sync_pick for s in group]
        sm = {s: SyncId(i) for i, s in enumerate(order)}
        for point_pick in itertools.product(*point_choices):
            chosen = dict(zip(point_slots, point_pick))
            pm = {}
            for s in order:
                for index in range(len(point_groups[s])):
                    for p in chosen[(s, index)]:
                        pm[p] = PointId(len(pm))
            key = _encode(state, pm, sm)
            if best_key is None or key < best_key:
                best_key, best_maps = key, (pm, sm)

    pm, sm = best_maps
    table = tuple(sorted(
        (
            SyncEntry(sm[e.sync], tuple(sorted(((pm[p], a) for p, a in e.bindings), key=lambda b: b[0])))
            for e in state.table
        ),
        key=lambda e: e.sync,
    ))
    return MachineState(
        subs=sort_subs(sub.renamed(pm, sm) for sub in state.subs),
        table=table,
        channels=state.channels,
        next_point=len(pm),
    )
