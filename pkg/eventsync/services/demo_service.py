# ============================================
# EVENTSYNC
# Demo Service
# ============================================

"""
Scripted scenarios against the live library.

Handles:
- Rendezvous, symmetric choose, wrapabort, guard counting and guarded
  receive scenarios
- Seeded scenario ordering
- Per-scenario wall-clock budgets

A scenario returns a short detail string on success and raises
AssertionError when an observation is wrong.
"""

import logging
import random
import time
from typing import Callable, Dict, List, Optional

import gevent

from eventsync import events, guarded
from eventsync.cell import Cell
from eventsync.config import settings
from eventsync.errors import ScenarioTimeoutError
from eventsync.schemas.report import DemoReport
from eventsync.schemas.scenario import ScenarioResult
from eventsync.services.stress_service import is_even
from eventsync.utils.constants import DEMO_SCENARIOS, Verdict
from eventsync.utils.timezone import format_duration_ms, format_iso, get_current_time

logger = logging.getLogger(__name__)

# How long a scenario waits to be sure an abort action did NOT run
QUIET_PERIOD_S = 0.01


# ============================================
# SCENARIOS
# ============================================

def scenario_rendezvous() -> str:
    """send(c, 7) against accept(c)."""
    channel = events.new("rendezvous")
    sender = gevent.spawn(events.send, channel, 7)
    value = events.accept(channel)
    sender.join()
    assert value == 7, f"accept returned {value!r}, expected 7"
    assert channel.stats.commits == 1, f"{channel.stats.commits} commits, expected 1"
    return "accept returned 7"


def scenario_symmetric_choose() -> str:
    """Both parties select between sending on one channel and receiving on another."""
    x, y = events.new("x"), events.new("y")

    left = gevent.spawn(
        events.select,
        events.wrap(events.transmit(x, 1), lambda _: ("sent", "x")),
        events.wrap(events.receive(y), lambda v: ("got", v)),
    )
    right = gevent.spawn(
        events.select,
        events.wrap(events.receive(x), lambda v: ("got", v)),
        events.wrap(events.transmit(y, 2), lambda _: ("sent", "y")),
    )
    outcome = (left.get(), right.get())
    assert outcome in {(("sent", "x"), ("got", 1)), (("got", 2), ("sent", "y"))}, (
        f"inconsistent outcome {outcome}"
    )
    return f"left={outcome[0][0]} right={outcome[1][0]}"


def scenario_wrapabort() -> str:
    """Abort actions run for the losing branch only, and never for the selected event."""
    c, d = events.new("c"), events.new("d")
    ran: List[str] = []
    signal = Cell("aborted")

    def on_abort(tag: str) -> Callable[[], None]:
        def action() -> None:
            ran.append(tag)
            signal.put(tag)
        return action

    gevent.spawn(events.send, d, 5)
    value = events.select(
        events.wrapabort(on_abort("c"), events.receive(c)),
        events.wrapabort(on_abort("d"), events.receive(d)),
    )
    assert value == 5, f"select returned {value!r}, expected 5"
    assert signal.get() == "c", "losing branch's abort action did not run"
    gevent.sleep(QUIET_PERIOD_S)
    assert ran == ["c"], f"abort actions ran: {ran}"

    # Abort around the whole choice: the choice is selected, nothing aborts
    e, f = events.new("e"), events.new("f")
    outer: List[str] = []
    gevent.spawn(events.send, e, 6)
    value = events.sync(events.wrapabort(
        lambda: outer.append("outer"),
        events.choose([events.receive(e), events.receive(f)]),
    ))
    gevent.sleep(QUIET_PERIOD_S)
    assert value == 6, f"sync returned {value!r}, expected 6"
    assert not outer, "abort action around the selected choice ran"
    return "losing abort ran once, selected abort never ran"


def scenario_guard_counting() -> str:
    """
    A guarded self-matching choice retries until a partner arrives; the
    guard runs once per attempt.
    """
    channel = events.new("guard")
    count = 0

    def thunk() -> events.Event:
        nonlocal count
        count += 1
        if count == 2:
            gevent.spawn(events.send, channel, 1)
        return events.choose([events.transmit(channel, 0), events.receive(channel)])

    trace = events.sync_traced(events.guard(thunk))
    assert trace.attempts >= 2, f"expected a forced retry, got {trace.attempts} attempt(s)"
    assert count == trace.attempts, f"guard ran {count} times over {trace.attempts} attempts"
    return f"guard ran {count} times over {trace.attempts} attempts"


def scenario_guarded_receive() -> str:
    """receive_if(isEven) skips a pending 3 and takes 4; 3 stays pending."""
    channel = guarded.new("guarded")
    gevent.spawn(guarded.send, channel, 3)
    gevent.spawn(guarded.send, channel, 4)

    value = guarded.accept_if(channel, is_even)
    assert value == 4, f"receive_if(is_even) returned {value!r}"
    leftover = guarded.accept(channel)
    assert leftover == 3, f"pending message was {leftover!r}, expected 3"
    return f"delivered 4 after {channel.stats.mismatches} mismatch(es); 3 stayed pending"


SCENARIOS: Dict[str, Callable[[], str]] = {
    "rendezvous": scenario_rendezvous,
    "symmetric_choose": scenario_symmetric_choose,
    "wrapabort": scenario_wrapabort,
    "guard_counting": scenario_guard_counting,
    "guarded_receive": scenario_guarded_receive,
}


# ============================================
# SERVICE
# ============================================

class DemoService:
    """
    Service class for running demo scenarios.

    All methods are static for easy use without instantiation.
    """

    @staticmethod
    def scenario_order(seed: int) -> List[str]:
        """Scenario names in the order fixed by `seed`."""
        order = list(DEMO_SCENARIOS)
        random.Random(seed).shuffle(order)
        return order

    @staticmethod
    def run_scenario(name: str, timeout_ms: int) -> ScenarioResult:
        """
        Run one scenario within `timeout_ms`.

        A scenario whose elapsed time reaches the budget is a timeout even
        if it finished, so a zero budget always times out.
        """
        scenario = SCENARIOS[name]
        budget = timeout_ms / 1000.0
        started = time.perf_counter()
        status, detail = Verdict.PASS, ""

        try:
            with gevent.Timeout(budget, ScenarioTimeoutError(f"{name} exceeded {timeout_ms} ms")):
                detail = scenario()
        except ScenarioTimeoutError as exc:
            status, detail = Verdict.TIMEOUT, exc.message
        except AssertionError as exc:
            status, detail = Verdict.FAIL, str(exc) or "assertion failed"
        except Exception as exc:
            logger.error(f"Scenario {name} raised", exc_info=True)
            status, detail = Verdict.FAIL, f"{type(exc).__name__}: {exc}"

        elapsed = time.perf_counter() - started
        if status == Verdict.PASS and elapsed >= budget:
            status, detail = Verdict.TIMEOUT, f"{name} exceeded {timeout_ms} ms"

        log = logger.info if status == Verdict.PASS else logger.warning
        log(f"Scenario {name}: {status} ({detail})")
        return ScenarioResult(
            name=name,
            status=status,
            elapsed_ms=format_duration_ms(elapsed),
            detail=detail,
        )

    @staticmethod
    def run(timeout_ms: Optional[int] = None, seed: Optional[int] = None) -> DemoReport:
        """
        Run every scenario in seeded order.

        Args:
            timeout_ms: Budget per scenario; defaults to settings.timeout_ms
            seed: Ordering seed; defaults to settings.seed

        Returns:
            DemoReport: verdict is pass iff every scenario passed
        """
        timeout_ms = settings.timeout_ms if timeout_ms is None else timeout_ms
        seed = settings.seed if seed is None else seed

        results = [
            DemoService.run_scenario(name, timeout_ms)
            for name in DemoService.scenario_order(seed)
        ]
        passed = sum(1 for r in results if r.status == Verdict.PASS)

        return DemoReport(
            seed=seed,
            timeout_ms=timeout_ms,
            scenarios=results,
            passed=passed,
            failed=len(results) - passed,
            verdict=Verdict.PASS if passed == len(results) else Verdict.FAIL,
            timestamp=format_iso(get_current_time()),
        )
