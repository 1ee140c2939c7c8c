# ============================================
# EVENTSYNC
# Program Families
# ============================================

"""
Exhaustive generation of small programs for model checking.

Programs are generated once per equivalence class under channel renaming
and proc reordering.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Tuple

from eventsync.models.program import Action, Program, Select, SourceProc, proc_sort_key

logger = logging.getLogger(__name__)

CHANNEL_NAMES = ("x", "y", "z", "w", "u", "v")


def channel_names(count: int) -> Tuple[str, ...]:
    """First `count` channel names: x, y, z, w, u, v, then c6, c7, ..."""
    return tuple(
        CHANNEL_NAMES[i] if i < len(CHANNEL_NAMES) else f"c{i}"
        for i in range(count)
    )


def _procs(channels: Tuple[str, ...], max_width: int, bare: bool) -> List[SourceProc]:
    actions = [
        action
        for channel in channels
        for action in (Action.input(channel), Action.output(channel))
    ]
    procs: List[SourceProc] = list(actions) if bare else []
    for width in range(1, max_width + 1):
        for combo in itertools.combinations_with_replacement(actions, width):
            procs.append(Select(combo))
    return sorted(procs, key=proc_sort_key)


def _canonical_key(program: Program, channels: Tuple[str, ...]) -> tuple:
    """Least normalized encoding over all channel renamings."""
    keys = []
    for perm in itertools.permutations(channels):
        renamed = program.renamed(dict(zip(channels, perm))).normalized()
        keys.append(tuple(proc_sort_key(p) for p in renamed.procs))
    return min(keys)


def enumerate_programs(
    max_channels: int,
    max_procs: int,
    max_width: int,
    min_procs: int = 1,
    bare: bool = True,
    limit: Optional[int] = None,
) -> Iterator[Program]:
    """
    Yield every program within the given size limits.

    Args:
        max_channels: Channels drawn from the first `max_channels` names
        max_procs: Maximum number of parallel procs
        max_width: Maximum number of actions per select
        min_procs: Minimum number of parallel procs
        bare: Include bare actions as procs
        limit: Stop after this many programs

    Yields:
        Program: One representative per renaming class, procs normalized
    """
    channels = channel_names(max_channels)
    procs = _procs(channels, max_width, bare)
    seen = set()
    produced = 0

    for count in range(min_procs, max_procs + 1):
        for combo in itertools.combinations_with_replacement(procs, count):
            program = Program(combo)
            key = _canonical_key(program, channels)
            if key in seen:
                continue
            seen.add(key)
            yield program.normalized()
            produced += 1
            if limit is not None and produced >= limit:
                return

    logger.debug(f"Enumerated {produced} programs")
