# ============================================
# EVENTSYNC
# Abstract Machine Model
# ============================================

"""
Value types of the abstract synchronization machine.

A machine state is a multiset of sub-states (one per principal phase)
plus the synchronizer table mapping each synchronizer to the points it
owns and the action bound to each point. Name restriction is modeled by
global freshness of point ids.

Sub-state shorthand used in messages and docs:
    p ↦ α        PointBound      Candidate_p  CandidateP    α   Released
    ⊙_c          ChanFree        Match_c(p,q) ChanMatch
    □_s          SyncOpen        ⊠_s          SyncClosed
    Select_s(p)  Selected        Reject(p)    Rejected
    Done_s(p)    DoneS           Retry_s      RetryS
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import ClassVar, Dict, Iterable, NewType, Tuple, Union

from eventsync.models.program import Action


PointId = NewType("PointId", int)
SyncId = NewType("SyncId", int)
ChannelId = NewType("ChannelId", str)


class RuleLabel(str, Enum):
    """Transition rule names; SRC labels source-program steps."""

    I = "I"
    II_I = "II.i"
    II_II = "II.ii"
    III_I = "III.i"
    III_II = "III.ii"
    III_III = "III.iii"
    III_IV = "III.iv"
    IV_I = "IV.i"
    IV_II = "IV.ii"
    SRC = "SRC"


# ============================================
# SUB-STATES
# ============================================

@dataclass(frozen=True, slots=True)
class PointBound:
    """p ↦ α: unmatched point."""

    KIND: ClassVar[int] = 0
    point: PointId
    action: Action

    def key(self, pm, sm) -> tuple:
        return (self.KIND, pm[self.point], self.action.sort_key)

    def renamed(self, pm, sm) -> "PointBound":
        return PointBound(pm[self.point], self.action)

    def __str__(self) -> str:
        return f"p{self.point}↦{self.action}"


@dataclass(frozen=True, slots=True)
class CandidateP:
    """Candidate_p: matched, waiting for its synchronizer."""

    KIND: ClassVar[int] = 1
    point: PointId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, pm[self.point])

    def renamed(self, pm, sm) -> "CandidateP":
        return CandidateP(pm[self.point])

    def __str__(self) -> str:
        return f"Candidate(p{self.point})"


@dataclass(frozen=True, slots=True)
class Released:
    """α: married; the action is released."""

    KIND: ClassVar[int] = 2
    action: Action

    def key(self, pm, sm) -> tuple:
        return (self.KIND, self.action.sort_key)

    def renamed(self, pm, sm) -> "Released":
        return self

    def __str__(self) -> str:
        return str(self.action)


@dataclass(frozen=True, slots=True)
class ChanFree:
    """⊙_c: channel free."""

    KIND: ClassVar[int] = 3
    channel: ChannelId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, self.channel)

    def renamed(self, pm, sm) -> "ChanFree":
        return self

    def __str__(self) -> str:
        return f"⊙{self.channel}"


@dataclass(frozen=True, slots=True)
class ChanMatch:
    """Match_c(p, q): channel busy with input point p and output point q."""

    KIND: ClassVar[int] = 4
    channel: ChannelId
    p: PointId
    q: PointId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, self.channel, pm[self.p], pm[self.q])

    def renamed(self, pm, sm) -> "ChanMatch":
        return ChanMatch(self.channel, pm[self.p], pm[self.q])

    def __str__(self) -> str:
        return f"Match{self.channel}(p{self.p},p{self.q})"


@dataclass(frozen=True, slots=True)
class SyncOpen:
    """□_s: synchronizer open."""

    KIND: ClassVar[int] = 5
    sync: SyncId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, sm[self.sync])

    def renamed(self, pm, sm) -> "SyncOpen":
        return SyncOpen(sm[self.sync])

    def __str__(self) -> str:
        return f"□s{self.sync}"


@dataclass(frozen=True, slots=True)
class SyncClosed:
    """⊠_s: synchronizer closed."""

    KIND: ClassVar[int] = 6
    sync: SyncId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, sm[self.sync])

    def renamed(self, pm, sm) -> "SyncClosed":
        return SyncClosed(sm[self.sync])

    def __str__(self) -> str:
        return f"⊠s{self.sync}"


@dataclass(frozen=True, slots=True)
class Selected:
    """Select_s(p): approved by its synchronizer."""

    KIND: ClassVar[int] = 7
    sync: SyncId
    point: PointId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, sm[self.sync], pm[self.point])

    def renamed(self, pm, sm) -> "Selected":
        return Selected(sm[self.sync], pm[self.point])

    def __str__(self) -> str:
        return f"Select_s{self.sync}(p{self.point})"


@dataclass(frozen=True, slots=True)
class Rejected:
    """Reject(p): refused by its synchronizer."""

    KIND: ClassVar[int] = 8
    point: PointId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, pm[self.point])

    def renamed(self, pm, sm) -> "Rejected":
        return Rejected(pm[self.point])

    def __str__(self) -> str:
        return f"Reject(p{self.point})"


@dataclass(frozen=True, slots=True)
class DoneS:
    """Done_s(p): selection confirmed."""

    KIND: ClassVar[int] = 9
    sync: SyncId
    point: PointId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, sm[self.sync], pm[self.point])

    def renamed(self, pm, sm) -> "DoneS":
        return DoneS(sm[self.sync], pm[self.point])

    def __str__(self) -> str:
        return f"Done_s{self.sync}(p{self.point})"


@dataclass(frozen=True, slots=True)
class RetryS:
    """Retry_s: selection canceled."""

    KIND: ClassVar[int] = 10
    sync: SyncId

    def key(self, pm, sm) -> tuple:
        return (self.KIND, sm[self.sync])

    def renamed(self, pm, sm) -> "RetryS":
        return RetryS(sm[self.sync])

    def __str__(self) -> str:
        return f"Retry_s{self.sync}"


SubState = Union[
    PointBound, CandidateP, Released, ChanFree, ChanMatch,
    SyncOpen, SyncClosed, Selected, Rejected, DoneS, RetryS,
]

# Sub-states that put a point in a phase of the protocol
POINT_PHASES = (PointBound, CandidateP, Selected, Rejected, DoneS)


class _Identity(dict):
    """Mapping that renames nothing; used for plain sort keys."""

    def __missing__(self, key):
        return key


IDENTITY = _Identity()


def sort_subs(subs: Iterable[SubState]) -> Tuple[SubState, ...]:
    return tuple(sorted(subs, key=lambda sub: sub.key(IDENTITY, IDENTITY)))


# ============================================
# SYNCHRONIZER TABLE
# ============================================

@dataclass(frozen=True, slots=True)
class SyncEntry:
    """One synchronizer: the points it owns and their actions."""

    sync: SyncId
    bindings: Tuple[Tuple[PointId, Action], ...]

    @property
    def points(self) -> Tuple[PointId, ...]:
        return tuple(p for p, _ in self.bindings)


# ============================================
# DENOTATION
# ============================================

@dataclass(frozen=True)
class Denotation:
    """
    Multiset of released actions.

    Stored as a sorted tuple so denotations hash and compare as multisets.
    """

    actions: Tuple[Action, ...] = ()

    @classmethod
    def of(cls, actions: Iterable[Action]) -> "Denotation":
        return cls(tuple(sorted(actions, key=lambda a: a.sort_key)))

    def __add__(self, other: "Denotation") -> "Denotation":
        return Denotation.of(self.actions + other.actions)

    def __len__(self) -> int:
        return len(self.actions)

    def counts(self) -> Counter:
        return Counter(self.actions)

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.actions) + "}"


# ============================================
# MACHINE STATE
# ============================================

@dataclass(frozen=True)
class MachineState:
    """
    Global machine state.

    Attributes:
        subs: Multiset of sub-states, kept sorted
        table: Synchronizer table, ordered by synchronizer id
        channels: Channels of the compiled program
        next_point: Fresh point-id counter
    """

    subs: Tuple[SubState, ...]
    table: Tuple[SyncEntry, ...]
    channels: frozenset
    next_point: int

    @cached_property
    def owner(self) -> Dict[PointId, SyncId]:
        """Point -> owning synchronizer."""
        return {p: entry.sync for entry in self.table for p, _ in entry.bindings}

    @cached_property
    def bound_action(self) -> Dict[PointId, Action]:
        """Point -> action bound by its synchronizer."""
        return {p: a for entry in self.table for p, a in entry.bindings}

    @cached_property
    def entries(self) -> Dict[SyncId, SyncEntry]:
        return {entry.sync: entry for entry in self.table}

    @cached_property
    def sub_set(self) -> frozenset:
        return frozenset(self.subs)

    def has(self, sub: SubState) -> bool:
        return sub in self.sub_set

    def denotation(self) -> Denotation:
        return Denotation.of(s.action for s in self.subs if isinstance(s, Released))

    def __str__(self) -> str:
        return " | ".join(str(s) for s in self.subs)
