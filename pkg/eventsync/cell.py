# ============================================
# EVENTSYNC
# Single-Slot Blocking Cell
# ============================================

"""
The one communication primitive the protocol is built from.

A cell carries at most one value. `put` deposits a value once the slot is
empty and `get` takes the value out, blocking while the slot is empty.
Blocked putters and getters are served in FIFO order.

Cells are backed by a gevent queue bounded to one item, so "blocking"
suspends the calling greenlet only.
"""

from typing import Generic, Optional, TypeVar

from gevent.queue import Empty, Queue

T = TypeVar("T")
D = TypeVar("D")


class Cell(Generic[T]):
    """
    Single-slot blocking cell (MVar semantics).

    Any value may be carried, including None and other cells.
    Cells compare by identity.
    """

    __slots__ = ("_slot", "label")

    def __init__(self, label: Optional[str] = None):
        self._slot: Queue = Queue(maxsize=1)
        self.label = label

    def put(self, value: T) -> None:
        """Deposit value, blocking until the slot is empty."""
        self._slot.put(value)

    def get(self) -> T:
        """Take the slot value, blocking until one is present."""
        return self._slot.get()

    def get_timeout(self, timeout: float, default: Optional[D] = None) -> "T | D | None":
        """
        Take the slot value if one arrives within `timeout` seconds.

        A timed-out call consumes nothing and returns `default`. Pass a
        private sentinel as `default` when None is a legitimate payload.
        """
        if timeout < 0:
            raise ValueError("timeout must be >= 0")
        try:
            return self._slot.get(timeout=timeout)
        except Empty:
            return default

    @property
    def full(self) -> bool:
        """True while a value occupies the slot. Diagnostics only."""
        return self._slot.qsize() > 0

    def __repr__(self) -> str:
        state = "full" if self.full else "empty"
        name = f" {self.label}" if self.label else ""
        return f"<Cell{name} {state} at {id(self):#x}>"


# ============================================
# FUNCTIONAL SURFACE
# ============================================

def new_cell(label: Optional[str] = None) -> Cell:
    """Return a fresh, empty cell."""
    return Cell(label)


def put(cell: Cell[T], value: T) -> None:
    """Deposit value into cell; blocks while the cell is full."""
    cell.put(value)


def get(cell: Cell[T]) -> T:
    """Take the value out of cell; blocks while the cell is empty."""
    return cell.get()


def get_timeout(cell: Cell[T], timeout: float, default: Optional[D] = None) -> "T | D | None":
    """Bounded `get`; returns `default` without consuming on timeout."""
    return cell.get_timeout(timeout, default)
