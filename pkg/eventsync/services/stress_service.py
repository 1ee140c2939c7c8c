# ============================================
# EVENTSYNC
# Stress Service
# ============================================

"""
Randomized live workloads.

Every generated system admits a complete matching whatever commits
first, so a hang means the protocol lost progress.

Modes:
- plain: pairs of tasks share a channel; one sends, the other accepts
- choose: channels are split into disjoint spans of two or three. A pair
  on a span gets complementary chooses, one sending where the other
  receives, so the two can commit on any channel of the span and no two
  tasks of the same side can match each other. A pool of one
  channel gets the symmetric choose between sending and receiving on it.

With guarded channels every message is even and every receive carries
an is-even predicate.
"""

import logging
import random
import time
from collections import Counter
from itertools import count
from typing import Any, Callable, Iterator, List, Optional, Tuple

import gevent

from eventsync import events, guarded
from eventsync.config import settings
from eventsync.schemas.report import StressReport
from eventsync.utils.constants import StressMode, Verdict
from eventsync.utils.timezone import format_duration_ms, format_iso, get_current_time

logger = logging.getLogger(__name__)

SENT = "sent"
GOT = "got"

# (tag, value, attempts)
TaskResult = Tuple[str, Any, int]


def is_even(value: int) -> bool:
    return value % 2 == 0


def _traced(event: events.Event) -> Callable[[], TaskResult]:
    def task() -> TaskResult:
        (tag, value), attempts = events.sync_traced(event)
        return tag, value, attempts
    return task


def _sender(module, channel, value) -> events.Event:
    return events.wrap(module.transmit(channel, value), lambda _: (SENT, value))


def _receiver(channel, use_guard: bool) -> events.Event:
    event = guarded.receive_if(channel, is_even) if use_guard else events.receive(channel)
    return events.wrap(event, lambda v: (GOT, v))


def _complementary(module, span: list, sends_first: bool, values: Iterator[int], use_guard: bool) -> events.Event:
    """Choose over a span, sending on alternate channels starting with the first iff `sends_first`."""
    branches = []
    for index, channel in enumerate(span):
        if (index % 2 == 0) == sends_first:
            branches.append(_sender(module, channel, next(values)))
        else:
            branches.append(_receiver(channel, use_guard))
    return events.choose(branches)


class StressService:
    """
    Service class for stress runs.

    All methods are static for easy use without instantiation.
    """

    @staticmethod
    def channel_spans(pool: list, rng: random.Random) -> List[list]:
        """
        Partition `pool` into disjoint spans of two or three channels.

        A span of one only occurs when the pool has a single channel.
        """
        channels = list(pool)
        rng.shuffle(channels)
        spans = []
        while channels:
            width = rng.choice((2, 3))
            if len(channels) - width == 1:
                width = len(channels) if len(channels) <= 3 else 2
            spans.append(channels[:width])
            channels = channels[width:]
        return spans

    @staticmethod
    def build_tasks(
        tasks: int,
        channels: int,
        seed: int,
        mode: str = StressMode.PLAIN,
        use_guard: bool = False,
    ) -> List[Callable[[], TaskResult]]:
        """
        Generate a seeded workload of `tasks` syncing tasks.

        Raises:
            ValueError: If tasks is odd or below 2, or channels is not positive
        """
        if tasks < 2 or tasks % 2:
            raise ValueError("tasks must be an even number >= 2")
        if channels <= 0:
            raise ValueError("channels must be > 0")

        rng = random.Random(seed)
        module = guarded if use_guard else events
        pool = [module.new(f"c{i}") for i in range(channels)]

        spans = StressService.channel_spans(pool, rng)
        values = count(0, 2)

        workload: List[Callable[[], TaskResult]] = []
        for _ in range(tasks // 2):
            if mode == StressMode.CHOOSE:
                span = rng.choice(spans)
                if len(span) == 1:
                    for _side in range(2):
                        workload.append(_traced(events.choose([
                            _sender(module, span[0], next(values)),
                            _receiver(span[0], use_guard),
                        ])))
                else:
                    for sends_first in (True, False):
                        workload.append(_traced(_complementary(module, span, sends_first, values, use_guard)))
            else:
                channel = rng.choice(pool)
                workload.append(_traced(_sender(module, channel, next(values))))
                workload.append(_traced(_receiver(channel, use_guard)))

        rng.shuffle(workload)
        return workload

    @staticmethod
    def run(
        tasks: Optional[int] = None,
        channels: Optional[int] = None,
        timeout_ms: Optional[int] = None,
        seed: Optional[int] = None,
        mode: str = StressMode.PLAIN,
        use_guard: bool = False,
    ) -> StressReport:
        """
        Run one seeded stress workload.

        Args:
            tasks: Syncing tasks (even); defaults to settings.stress_tasks
            channels: Channels; defaults to settings.stress_channels
            timeout_ms: Wall-clock budget; defaults to settings.stress_timeout_ms
            seed: Generator seed; defaults to settings.seed
            mode: StressMode.PLAIN or StressMode.CHOOSE
            use_guard: Use guarded channels with is-even predicates

        Returns:
            StressReport: verdict is pass iff every task completed, the
            received values equal the sent values and no predicate was
            violated; timeout if any task was still blocked at the deadline
            or the run took the whole budget
        """
        tasks = settings.stress_tasks if tasks is None else tasks
        channels = settings.stress_channels if channels is None else channels
        timeout_ms = settings.stress_timeout_ms if timeout_ms is None else timeout_ms
        seed = settings.seed if seed is None else seed

        workload = StressService.build_tasks(tasks, channels, seed, mode, use_guard)
        logger.info(
            f"Stress run: {tasks} tasks, {channels} channels, mode={mode}, "
            f"guarded={use_guard}, seed={seed}"
        )

        started = time.perf_counter()
        greenlets = [gevent.spawn(task) for task in workload]
        gevent.joinall(greenlets, timeout=timeout_ms / 1000.0)
        elapsed = time.perf_counter() - started

        pending = [g for g in greenlets if not g.ready()]
        if pending:
            logger.warning(f"{len(pending)} of {tasks} tasks still blocked after {timeout_ms} ms")
            gevent.killall(pending, block=False)

        results: List[TaskResult] = [g.value for g in greenlets if g.ready() and g.successful()]
        failed = sum(1 for g in greenlets if g.ready() and not g.successful())
        sent = Counter(value for tag, value, _ in results if tag == SENT)
        got = Counter(value for tag, value, _ in results if tag == GOT)
        commits = sum(sent.values())
        retries = sum(attempts - 1 for _, _, attempts in results)
        violations = sum(1 for tag, value, _ in results if tag == GOT and use_guard and not is_even(value))
        values_match = sent == got

        if pending or elapsed >= timeout_ms / 1000.0:
            verdict = Verdict.TIMEOUT
        elif failed or not values_match or violations:
            verdict = Verdict.FAIL
        else:
            verdict = Verdict.PASS

        throughput = commits / elapsed if elapsed > 0 else 0.0
        return StressReport(
            seed=seed,
            mode=mode,
            guarded=use_guard,
            tasks=tasks,
            channels=channels,
            timeout_ms=timeout_ms,
            completed=len(results),
            failed_tasks=failed,
            commits=commits,
            retries=retries,
            values_match=values_match,
            predicate_violations=violations,
            elapsed_ms=format_duration_ms(elapsed),
            throughput=f"{throughput:.1f}",
            verdict=verdict,
            timestamp=format_iso(get_current_time()),
        )
