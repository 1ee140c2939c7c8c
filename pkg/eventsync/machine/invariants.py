# ============================================
# EVENTSYNC
# Machine Invariants
# ============================================

"""
Well-formedness conditions every reachable machine state satisfies.

Conditions:
1. Ownership: each point has exactly one owning synchronizer and at most
   one phase sub-state; each synchronizer is either open or closed.
2. Channels: each channel is either free or busy with one match.
3. Decisions: Select/Reject/Done/Retry need a closed synchronizer, and a
   closed synchronizer holds at most one of Select/Done/Retry.
4. Matches: a match pairs an input point and an output point of its
   channel, both in a candidate/selected/rejected phase, and every point
   in such a phase belongs to exactly one match.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import List

from eventsync.models.machine import (
    POINT_PHASES,
    CandidateP,
    ChanFree,
    ChanMatch,
    DoneS,
    MachineState,
    Rejected,
    RetryS,
    Selected,
    SyncClosed,
    SyncOpen,
)
from eventsync.models.program import Action


@dataclass(frozen=True)
class Violation:
    """One broken condition, with a readable explanation."""

    condition: int
    message: str

    def __str__(self) -> str:
        return f"condition {self.condition}: {self.message}"


_SESSION = (CandidateP, Selected, Rejected)


def check_invariants(state: MachineState) -> List[Violation]:
    """
    Check all four conditions.

    Returns:
        List of violations; empty iff the state is well-formed
    """
    violations: List[Violation] = []

    def fail(condition: int, message: str) -> None:
        violations.append(Violation(condition, message))

    # --- 1. ownership ---
    owners = Counter(p for entry in state.table for p in entry.points)
    for point, count in sorted(owners.items()):
        if count > 1:
            fail(1, f"point p{point} owned by {count} synchronizers")

    phases = defaultdict(list)
    for sub in state.subs:
        if isinstance(sub, POINT_PHASES):
            phases[sub.point].append(sub)
    for point, subs in sorted(phases.items()):
        if point not in owners:
            fail(1, f"point p{point} has no synchronizer")
        if len(subs) > 1:
            fail(1, f"point p{point} in {len(subs)} phases: {', '.join(map(str, subs))}")

    status = Counter()
    for sub in state.subs:
        if isinstance(sub, (SyncOpen, SyncClosed)):
            status[sub.sync] += 1
    for entry in state.table:
        if status[entry.sync] != 1:
            fail(1, f"synchronizer s{entry.sync} has {status[entry.sync]} open/closed markers")

    # --- 2. channels ---
    channel_markers = Counter()
    for sub in state.subs:
        if isinstance(sub, (ChanFree, ChanMatch)):
            channel_markers[sub.channel] += 1
            if sub.channel not in state.channels:
                fail(2, f"unknown channel {sub.channel}")
    for channel in sorted(state.channels):
        if channel_markers[channel] != 1:
            fail(2, f"channel {channel} has {channel_markers[channel]} free/match markers")

    # --- 3. decisions ---
    decisions = Counter()
    for sub in state.subs:
        if isinstance(sub, (Selected, DoneS)):
            if state.owner.get(sub.point) != sub.sync:
                fail(3, f"{sub} names a synchronizer that does not own the point")
            decisions[sub.sync] += 1
            sync = sub.sync
        elif isinstance(sub, RetryS):
            decisions[sub.sync] += 1
            sync = sub.sync
        elif isinstance(sub, Rejected):
            sync = state.owner.get(sub.point)
        else:
            continue
        if sync is not None and not state.has(SyncClosed(sync)):
            fail(3, f"{sub} without closed synchronizer s{sync}")
    for sync, count in sorted(decisions.items()):
        if count > 1:
            fail(3, f"closed synchronizer s{sync} holds {count} select/done/retry sub-states")

    # --- 4. matches ---
    matched = Counter()
    for sub in state.subs:
        if not isinstance(sub, ChanMatch):
            continue
        matched[sub.p] += 1
        matched[sub.q] += 1
        if state.bound_action.get(sub.p) != Action.input(sub.channel):
            fail(4, f"{sub}: p{sub.p} is not bound to input {sub.channel}")
        if state.bound_action.get(sub.q) != Action.output(sub.channel):
            fail(4, f"{sub}: p{sub.q} is not bound to output {sub.channel}")
        for point in (sub.p, sub.q):
            if not any(isinstance(s, _SESSION) for s in phases.get(point, [])):
                fail(4, f"{sub}: p{point} is not in a candidate/selected/rejected phase")

    for point, subs in sorted(phases.items()):
        if any(isinstance(s, _SESSION) for s in subs) and matched[point] != 1:
            fail(4, f"p{point} in session but in {matched[point]} matches")

    return violations
