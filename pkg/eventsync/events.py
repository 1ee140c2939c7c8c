# ============================================
# EVENTSYNC
# First-Class Synchronous Events
# ============================================

"""
Channels, events and event combinators over single-slot cells.

Handles:
- Channels served by a looping channel actor
- Base events (receive, transmit) run as point actors
- Combinators: guard, wrap, choose, wrapabort
- Synchronization: one synchronizer actor per attempt, retried until
  one of the event's points commits

Cells used by the protocol (all plain `Cell`s):
    point     Cell[None]                  signaled when the point commits
    commit    Cell[bool]                  True = committed, False = canceled
    decision  Cell[Optional[commit]]      None = rejected by the synchronizer
    candidate Cell[decision]              one reply per registration
    in / out  Cell[candidate]             channel registration queues
    sync      Cell[(point, decision)]     synchronizer inbox
    name      Cell[List[point]]           points an event encloses
    abort     Cell[(List[point], thunk)]  abort actions for the synchronizer

Every task is a gevent greenlet. Tasks of losing branches and canceled
attempts stay blocked forever and are reclaimed with their cells.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, List, NamedTuple, Optional, Sequence, TypeVar

import gevent

from eventsync.cell import Cell
from eventsync.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
U = TypeVar("U")

# Outcome tags on result cells
_DONE = "done"
_FAILED = "failed"
_RETRY = "retry"

# First message on a sync cell that closes the attempt
_CLOSE = object()


class _GuardFailure(Exception):
    """A guard thunk raised before its event offered any point."""

    def __init__(self, error: Exception):
        super().__init__(error)
        self.error = error


# ============================================
# CHANNELS
# ============================================

@dataclass
class ChannelStats:
    """Per-channel counters; observability only."""

    sessions: int = 0
    commits: int = 0
    cancellations: int = 0


@dataclass(eq=False)
class Channel(Generic[T]):
    """
    Synchronous rendezvous channel.

    Attributes:
        in_cell: Registration queue of input points
        out_cell: Registration queue of output points
        payload: Carries one message per committed rendezvous
        stats: Session counters
    """

    in_cell: Cell
    out_cell: Cell
    payload: Cell
    label: Optional[str] = None
    stats: ChannelStats = field(default_factory=ChannelStats)

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<Channel{name} sessions={self.stats.sessions} commits={self.stats.commits}>"


def channel_session(in_cell: Cell, out_cell: Cell, stats: Optional[ChannelStats] = None) -> None:
    """
    Serve one matching session.

    Pairs the next input and output registrations, asks each point's
    synchronizer for a decision (input side first), then confirms to every
    approved side whether the other side was approved too.
    """
    candidate_i = in_cell.get()
    candidate_o = out_cell.get()

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

    if stats is not None:
        stats.sessions += 1
        if commit_i is not None and commit_o is not None:
            stats.commits += 1
        elif commit_i is not None or commit_o is not None:
            stats.cancellations += 1


def channel_actor(in_cell: Cell, out_cell: Cell, stats: Optional[ChannelStats] = None) -> None:
    """Serve sessions on (in_cell, out_cell) forever."""
    while True:
        channel_session(in_cell, out_cell, stats)


def new(label: Optional[str] = None) -> Channel:
    """
    Create a channel and start its actor.

    Example:
        >>> c = new("orders")
        >>> gevent.spawn(send, c, 7)
        >>> accept(c)
        7
    """
    channel = Channel(Cell("in"), Cell("out"), Cell("payload"), label)
    gevent.spawn(channel_actor, channel.in_cell, channel.out_cell, channel.stats)
    return channel


# ============================================
# PROTOCOL ACTORS
# ============================================

def point_input(sync: Cell, point: Cell, in_cell: Cell, act: Callable[[], T]) -> T:
    """Register an input point; run `act` once the point commits."""
    candidate = Cell("candidate")
    in_cell.put(candidate)
    decision = candidate.get()
    sync.put((point, decision))
    point.get()
    return act()


def point_output(sync: Cell, point: Cell, out_cell: Cell, act: Callable[[], None]) -> None:
    """Register an output point; run `act` once the point commits."""
    candidate = Cell("candidate")
    out_cell.put(candidate)
    decision = candidate.get()
    sync.put((point, decision))
    point.get()
    act()


def _reject_rest(sync: Cell, closed: bool) -> None:
    while True:
        point, reply = sync.get()
        reply.put(closed if point is _CLOSE else None)


def _close_attempt(sync: Cell) -> bool:
    """
    Stop the synchronizer from selecting any further point.

    Returns:
        bool: True if no point had been selected, False if one already was
    """
    reply = Cell("close")
    sync.put((_CLOSE, reply))
    return reply.get()


def _run_detached(action: Callable[[], Any]) -> None:
    try:
        action()
    except Exception:
        logger.error("Abort action failed", exc_info=True)


def _serve_aborts(point: Cell, abort: Cell) -> None:
    """Run every abort action whose event does not enclose `point`."""
    while True:
        enclosed, action = abort.get()
        if any(p is point for p in enclosed):
            continue
        logger.debug(f"Spawning abort action for event enclosing {len(enclosed)} points")
        gevent.spawn(_run_detached, action)


def sync_actor(sync: Cell, abort: Cell, retry: Callable[[], None]) -> None:
    """
    Synchronizer for one attempt.

    The first point to report is selected and every later one rejected.
    A close request arriving first selects nothing.
    On commit the point is released and abort actions are served; on
    cancellation `retry` starts the next attempt.
    """
    point, decision = sync.get()
    if point is _CLOSE:
        gevent.spawn(_reject_rest, sync, True)
        decision.put(True)
        return
    gevent.spawn(_reject_rest, sync, False)

    commit = Cell("commit")
    decision.put(commit)
    if commit.get():
        point.put(None)
        _serve_aborts(point, abort)
    else:
        retry()


# ============================================
# EVENTS
# ============================================

@dataclass(frozen=True)
class Event(Generic[T]):
    """
    A synchronous operation, performed by `sync`.

    `run(sync, name, abort)` registers the event's points with the
    synchronizer cell, eventually publishes the enclosed points on `name`
    and returns the event's value once one of its points commits.
    """

    run: Callable[[Cell, Cell, Cell], T]
    label: str = "event"

    def __call__(self, sync: Cell, name: Cell, abort: Cell) -> T:
        return self.run(sync, name, abort)


def _peek(cell: Cell):
    value = cell.get()
    cell.put(value)
    return value


def receive(channel: Channel[T]) -> Event[T]:
    """Event that receives one message on `channel`."""

    def run(sync: Cell, name: Cell, abort: Cell) -> T:
        point = Cell("point")
        gevent.spawn(name.put, [point])
        return point_input(sync, point, channel.in_cell, channel.payload.get)

    return Event(run, "receive")


def transmit(channel: Channel[T], message: T) -> Event[None]:
    """Event that sends `message` on `channel`."""

    def run(sync: Cell, name: Cell, abort: Cell) -> None:
        point = Cell("point")
        gevent.spawn(name.put, [point])
        return point_output(sync, point, channel.out_cell, lambda: channel.payload.put(message))

    return Event(run, "transmit")


def guard(thunk: Callable[[], Event[T]]) -> Event[T]:
    """
    Event that runs `thunk` on every synchronization attempt and then
    behaves as the event it returns.
    """

    def run(sync: Cell, name: Cell, abort: Cell) -> T:
        try:
            event = thunk()
        except Exception as exc:
            # enclosing chooses still need a name for this branch
            gevent.spawn(name.put, [])
            raise _GuardFailure(exc) from exc
        return event(sync, name, abort)

    return Event(run, "guard")


def wrap(event: Event[T], f: Callable[[T], U]) -> Event[U]:
    """Event that applies `f` to the result of `event` after commit."""

    def run(sync: Cell, name: Cell, abort: Cell) -> U:
        return f(event(sync, name, abort))

    return Event(run, "wrap")


def _run_branch(event: Event, sync: Cell, name: Cell, abort: Cell, result: Cell) -> None:
    try:
        value = event(sync, name, abort)
    except Exception as exc:
        result.put((_FAILED, exc))
    else:
        result.put((_DONE, value))


def choose(events: Sequence[Event[T]]) -> Event[T]:
    """
    Event that commits exactly one of `events`.

    `choose([])` never commits: a sync on it blocks forever. If a branch's
    guard raises, the attempt is closed so that no other branch can commit
    afterwards; the error is raised unless a branch had already been
    selected, in which case that branch's outcome stands.
    """
    events = list(events)

    def run(sync: Cell, name: Cell, abort: Cell) -> T:
        result = Cell("choose")
        enclosed: List[Cell] = []
        for event in events:
            branch_name = Cell("name")
            gevent.spawn(_run_branch, event, sync, branch_name, abort, result)
            enclosed = _peek(branch_name) + enclosed
        gevent.spawn(name.put, enclosed)

        awaiting_winner = False
        while True:
            tag, value = result.get()
            if tag == _DONE:
                return value
            if not isinstance(value, _GuardFailure):
                raise value
            if awaiting_winner:
                continue
            if _close_attempt(sync):
                raise value
            # a sibling's point was selected first; its outcome decides
            awaiting_winner = True

    return Event(run, "choose")


def wrapabort(action: Callable[[], Any], event: Event[T]) -> Event[T]:
    """
    Event that behaves as `event`; if the synchronization commits at a
    point outside `event`, `action` is spawned once.
    """

    def run(sync: Cell, name: Cell, abort: Cell) -> T:
        def register() -> None:
            abort.put((_peek(name), action))

        gevent.spawn(register)
        return event(sync, name, abort)

    return Event(run, "wrapabort")


# ============================================
# SYNCHRONIZATION
# ============================================

class SyncTrace(NamedTuple):
    """Value of a sync together with its number of attempts."""

    value: Any
    attempts: int


def _run_attempt(event: Event, sync: Cell, name: Cell, abort: Cell, outcome: Cell) -> None:
    try:
        value = event(sync, name, abort)
    except Exception as exc:
        outcome.put((_FAILED, exc))
    else:
        outcome.put((_DONE, value))


def _watch_second_deposit(outcome: Cell, attempts: int) -> None:
    extra = outcome.get_timeout(settings.deposit_grace_ms / 1000.0)
    if extra is not None and extra[0] != _RETRY:
        logger.warning(f"Second result deposited after commit of attempt {attempts}: {extra[0]}")


def sync_traced(event: Event[T]) -> SyncTrace:
    """
    Synchronize on `event` and report how many attempts it took.

    Each attempt gets fresh synchronizer, name and abort cells; a canceled
    attempt is abandoned and the next one started.

    Raises:
        Exception: Whatever the event's computation raised
    """
    outcome = Cell("outcome")
    attempts = 0
    while True:
        attempts += 1
        sync, name, abort = Cell("sync"), Cell("name"), Cell("abort")
        gevent.spawn(sync_actor, sync, abort, lambda: outcome.put((_RETRY, None)))
        gevent.spawn(_run_attempt, event, sync, name, abort, outcome)

        tag, value = outcome.get()
        if tag == _RETRY:
            logger.debug(f"Sync attempt {attempts} canceled; retrying")
            continue
        if settings.debug:
            gevent.spawn(_watch_second_deposit, outcome, attempts)
        if tag == _FAILED:
            raise value.error if isinstance(value, _GuardFailure) else value
        return SyncTrace(value, attempts)


def sync(event: Event[T]) -> T:
    """Synchronize on `event` and return its value."""
    return sync_traced(event).value


def select(*events: Event[T]) -> T:
    """Synchronize on the choice of `events`."""
    return sync(choose(events))


def accept(channel: Channel[T]) -> T:
    """Receive one message on `channel`."""
    return sync(receive(channel))


def send(channel: Channel[T], message: T) -> None:
    """Send `message` on `channel`."""
    sync(transmit(channel, message))
