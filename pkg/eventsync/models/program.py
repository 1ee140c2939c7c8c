# ============================================
# EVENTSYNC
# Source Language Model
# ============================================

"""
Value types for select-programs.

A program is a parallel composition of procs; a proc is either a bare
action or a `select` over a non-empty list of actions. Actions are input
(`c`) or output (`!c`) on a named channel.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple, Union

from eventsync.utils.constants import OUTPUT_MARKER, SELECT_KEYWORD


IDENTIFIER_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Polarity(str, Enum):
    """Direction of an action on its channel."""

    INPUT = "in"
    OUTPUT = "out"


@dataclass(frozen=True, slots=True)
class Action:
    """
    Input or output on a channel.

    Attributes:
        channel: Channel name (identifier)
        polarity: INPUT for `c`, OUTPUT for `!c`
    """

    channel: str
    polarity: Polarity

    def __post_init__(self):
        if not IDENTIFIER_PATTERN.match(self.channel):
            raise ValueError(f"Invalid channel name: {self.channel!r}")

    @classmethod
    def input(cls, channel: str) -> "Action":
        return cls(channel, Polarity.INPUT)

    @classmethod
    def output(cls, channel: str) -> "Action":
        return cls(channel, Polarity.OUTPUT)

    @property
    def is_output(self) -> bool:
        return self.polarity is Polarity.OUTPUT

    def complement(self) -> "Action":
        """The action this one synchronizes with."""
        flipped = Polarity.INPUT if self.is_output else Polarity.OUTPUT
        return Action(self.channel, flipped)

    def renamed(self, channels: dict) -> "Action":
        return Action(channels.get(self.channel, self.channel), self.polarity)

    @property
    def sort_key(self) -> Tuple[str, int]:
        # inputs sort before outputs on the same channel
        return (self.channel, 1 if self.is_output else 0)

    def __str__(self) -> str:
        return f"{OUTPUT_MARKER}{self.channel}" if self.is_output else self.channel


@dataclass(frozen=True, slots=True)
class Select:
    """Synchronization of a choice of actions."""

    actions: Tuple[Action, ...]

    def __post_init__(self):
        if not self.actions:
            raise ValueError("select requires at least one action")

    @property
    def sort_key(self) -> tuple:
        return (1, tuple(a.sort_key for a in self.actions))

    def renamed(self, channels: dict) -> "Select":
        return Select(tuple(a.renamed(channels) for a in self.actions))

    def __str__(self) -> str:
        return f"{SELECT_KEYWORD}({','.join(str(a) for a in self.actions)})"


SourceProc = Union[Action, Select]


def proc_sort_key(proc: SourceProc) -> tuple:
    """Total order on procs: bare actions first, then selects."""
    if isinstance(proc, Action):
        return (0, (proc.sort_key,))
    return proc.sort_key


@dataclass(frozen=True, slots=True)
class Program:
    """
    Parallel composition of procs.

    Equality is structural and order-sensitive; use `normalized()` to
    compare programs up to the structural congruence of `|`.
    """

    procs: Tuple[SourceProc, ...]

    @classmethod
    def of(cls, procs: Iterable[SourceProc]) -> "Program":
        return cls(tuple(procs))

    def normalized(self) -> "Program":
        """Same program with procs in canonical order."""
        return Program(tuple(sorted(self.procs, key=proc_sort_key)))

    @property
    def channels(self) -> frozenset:
        """Every channel named by some action of the program."""
        names = set()
        for proc in self.procs:
            actions = (proc,) if isinstance(proc, Action) else proc.actions
            names.update(a.channel for a in actions)
        return frozenset(names)

    @property
    def selects(self) -> Tuple[Select, ...]:
        return tuple(p for p in self.procs if isinstance(p, Select))

    def renamed(self, channels: dict) -> "Program":
        return Program(tuple(p.renamed(channels) for p in self.procs))

    def __str__(self) -> str:
        return " | ".join(str(p) for p in self.procs)
