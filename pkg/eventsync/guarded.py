# ============================================
# EVENTSYNC
# Guarded Communication
# ============================================

"""
Channels whose receive events carry a predicate on the message.

An input point registers its predicate and an output point its message;
the channel actor approaches the synchronizers only when the message
satisfies the predicate. Otherwise both points are told there is no match
and register again with fresh candidate cells.

Guarded channels are a separate type: the registration cells carry
(candidate, predicate) and (candidate, message) pairs instead of bare
candidate cells.

The message reaches the receiver through the session: once both sides
commit, the channel actor takes the sender's payload and forwards it on
the receiver's candidate cell, so rendezvous with different predicates
never exchange values.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Generic, Optional, TypeVar

import gevent

from eventsync.cell import Cell
from eventsync.events import ChannelStats, Event, sync

logger = logging.getLogger(__name__)

T = TypeVar("T")

Predicate = Callable[[T], bool]


def always(_value) -> bool:
    return True


# ============================================
# CHANNELS
# ============================================

@dataclass
class GuardedChannelStats(ChannelStats):
    """Session counters plus registration and mismatch counts."""

    input_registrations: int = 0
    output_registrations: int = 0
    mismatches: int = 0


@dataclass(eq=False)
class GuardedChannel(Generic[T]):
    """Rendezvous channel with predicate-carrying receivers."""

    in_cell: Cell
    out_cell: Cell
    payload: Cell
    label: Optional[str] = None
    stats: GuardedChannelStats = field(default_factory=GuardedChannelStats)

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return (
            f"<GuardedChannel{name} sessions={self.stats.sessions} "
            f"mismatches={self.stats.mismatches}>"
        )


def _satisfies(cond: Predicate, message) -> bool:
    try:
        return bool(cond(message))
    except Exception:
        logger.warning(f"Receive predicate raised on {message!r}; treated as no match", exc_info=True)
        return False


def g_channel_session(
    in_cell: Cell,
    out_cell: Cell,
    payload: Cell,
    stats: Optional[GuardedChannelStats] = None,
) -> None:
    """Serve one guarded matching session."""
    stats = stats if stats is not None else GuardedChannelStats()
    candidate_i, cond = in_cell.get()
    candidate_o, message = out_cell.get()
    stats.input_registrations += 1
    stats.output_registrations += 1
    stats.sessions += 1

    if not _satisfies(cond, message):
        stats.mismatches += 1
        logger.debug(f"Predicate rejected {message!r}; bouncing both registrations")
        candidate_i.put(None)
        candidate_o.put(None)
        return

    decision_i = Cell("decision")
    candidate_i.put(decision_i)
    commit_i = decision_i.get()

    decision_o = Cell("decision")
    candidate_o.put(decision_o)
    commit_o = decision_o.get()

    if commit_i is not None:
        commit_i.put(commit_o is not None)
    if commit_o is not None:
        commit_o.put(commit_i is not None)

    if commit_i is not None and commit_o is not None:
        stats.commits += 1
        candidate_i.put(payload.get())
    elif commit_i is not None or commit_o is not None:
        stats.cancellations += 1


def g_channel_actor(
    in_cell: Cell,
    out_cell: Cell,
    payload: Cell,
    stats: Optional[GuardedChannelStats] = None,
) -> None:
    """Serve guarded sessions forever."""
    while True:
        g_channel_session(in_cell, out_cell, payload, stats)


def new(label: Optional[str] = None) -> GuardedChannel:
    """Create a guarded channel and start its actor."""
    channel = GuardedChannel(Cell("in"), Cell("out"), Cell("payload"), label)
    gevent.spawn(g_channel_actor, channel.in_cell, channel.out_cell, channel.payload, channel.stats)
    return channel


# ============================================
# POINT ACTORS
# ============================================

def g_point_input(sync_cell: Cell, point: Cell, in_cell: Cell, cond: Predicate, act: Callable[[Cell], T]) -> T:
    """
    Register an input point with its predicate until matched.

    `act` receives the candidate cell of the committed registration,
    on which the channel forwards the message.
    """
    while True:
        candidate = Cell("candidate")
        in_cell.put((candidate, cond))
        decision = candidate.get()
        if decision is not None:
            break
    sync_cell.put((point, decision))
    point.get()
    return act(candidate)


def g_point_output(sync_cell: Cell, point: Cell, out_cell: Cell, message, act: Callable[[], None]) -> None:
    """Register an output point with its message until matched."""
    while True:
        candidate = Cell("candidate")
        out_cell.put((candidate, message))
        decision = candidate.get()
        if decision is not None:
            break
    sync_cell.put((point, decision))
    point.get()
    act()


# ============================================
# EVENTS
# ============================================

def receive_if(channel: GuardedChannel[T], cond: Predicate) -> Event[T]:
    """Event that receives a message satisfying `cond` on `channel`."""

    def run(sync_cell: Cell, name: Cell, abort: Cell) -> T:
        point = Cell("point")
        gevent.spawn(name.put, [point])
        return g_point_input(sync_cell, point, channel.in_cell, cond, lambda candidate: candidate.get())

    return Event(run, "receive_if")


def receive(channel: GuardedChannel[T]) -> Event[T]:
    """Unconditional receive on a guarded channel."""
    return receive_if(channel, always)


def transmit(channel: GuardedChannel[T], message: T) -> Event[None]:
    """Event that sends `message` on a guarded channel."""

    def run(sync_cell: Cell, name: Cell, abort: Cell) -> None:
        point = Cell("point")
        gevent.spawn(name.put, [point])
        return g_point_output(
            sync_cell, point, channel.out_cell, message, lambda: channel.payload.put(message)
        )

    return Event(run, "transmit")


def accept_if(channel: GuardedChannel[T], cond: Predicate) -> T:
    return sync(receive_if(channel, cond))


def accept(channel: GuardedChannel[T]) -> T:
    return sync(receive(channel))


def send(channel: GuardedChannel[T], message: T) -> None:
    sync(transmit(channel, message))
