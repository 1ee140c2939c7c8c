"""Tests for single-slot cells."""

import random
from collections import Counter

import gevent
import pytest

from eventsync import cell as cells
from eventsync.cell import Cell

pytestmark = pytest.mark.usefixtures("deadline")


def test_put_then_get():
    c = Cell()
    c.put(5)
    assert c.full
    assert c.get() == 5
    assert not c.full


def test_get_blocks_until_put():
    c = Cell()
    getter = gevent.spawn(c.get)
    gevent.sleep(0.01)
    assert not getter.ready()

    c.put("late")
    assert getter.get(timeout=1) == "late"


def test_put_blocks_while_full():
    c = Cell()
    c.put(1)
    putter = gevent.spawn(c.put, 2)
    gevent.sleep(0.01)
    assert not putter.ready()

    assert c.get() == 1
    putter.join(timeout=1)
    assert putter.ready()
    assert c.get() == 2


def test_waiting_getters_are_served_in_order():
    c = Cell()
    received = []
    getters = [gevent.spawn(lambda tag=tag: received.append((tag, c.get()))) for tag in "abc"]
    gevent.sleep(0.01)

    for value in (1, 2, 3):
        c.put(value)
    gevent.joinall(getters, timeout=1)

    assert received == [("a", 1), ("b", 2), ("c", 3)]


def test_carries_none_and_cells():
    c = Cell()
    inner = Cell("inner")
    c.put(None)
    assert c.get() is None
    c.put(inner)
    assert c.get() is inner


def test_get_timeout_returns_default_without_consuming():
    c = Cell()
    assert c.get_timeout(0.01, "nothing") == "nothing"

    missing = object()
    c.put(None)
    assert c.get_timeout(0.01, missing) is None
    assert c.get_timeout(0, missing) is missing


def test_get_timeout_rejects_negative():
    with pytest.raises(ValueError):
        Cell().get_timeout(-1)


def test_functional_surface():
    c = cells.new_cell("fn")
    cells.put(c, "v")
    assert cells.get(c) == "v"
    assert cells.get_timeout(c, 0.01, default=0) == 0


def test_repr_shows_state():
    c = Cell("slot")
    assert "slot empty" in repr(c)
    c.put(1)
    assert "slot full" in repr(c)


def _exactly_once(seed: int, values: int, workers: int) -> None:
    rng = random.Random(seed)
    c = Cell()
    sent = list(range(values))
    received = []

    chunks = [sent[i::workers] for i in range(workers)]
    quotas = [len(chunk) for chunk in chunks]
    rng.shuffle(quotas)

    def producer(chunk):
        for value in chunk:
            c.put(value)
            if rng.random() < 0.3:
                gevent.sleep(0)

    def consumer(quota):
        for _ in range(quota):
            received.append(c.get())
            if rng.random() < 0.3:
                gevent.sleep(0)

    tasks = [gevent.spawn(producer, chunk) for chunk in chunks]
    tasks += [gevent.spawn(consumer, quota) for quota in quotas]
    rng.shuffle(tasks)
    gevent.joinall(tasks, timeout=5)

    assert all(t.ready() for t in tasks)
    assert Counter(received) == Counter(sent)
    assert not c.full


@pytest.mark.parametrize("seed", range(5))
def test_exactly_once_transfer(seed):
    _exactly_once(seed, values=500, workers=8)


@pytest.mark.slow
def test_exactly_once_transfer_at_scale():
    for seed in range(10):
        _exactly_once(seed, values=10_000, workers=16)
