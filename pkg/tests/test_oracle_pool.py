import threading
import time

import pytest

from tanglekit.oracle_pool import OraclePool


@pytest.fixture
def pool():
    p = OraclePool(max_workers=3)
    yield p
    p.shutdown()


def test_results_come_back_in_input_order(pool):
    def slow_square(x):
        time.sleep(0.01 * (5 - x))
        return x * x

    assert pool.map_ordered(slow_square, range(6)) == [0, 1, 4, 9, 16, 25]
    assert pool.running


def test_small_jobs_run_inline(pool):
    assert pool.map_ordered(lambda x: threading.current_thread().name, ["a"]) == [
        threading.current_thread().name
    ]
    assert not pool.running


def test_nested_calls_do_not_deadlock(pool):
    def inner(x):
        return pool.map_ordered(lambda y: x + y, [1, 2, 3])

    assert pool.map_ordered(inner, [10, 20]) == [[11, 12, 13], [21, 22, 23]]


def test_execute(pool):
    assert pool.execute(pow, 2, 10) == 1024


def test_configure(pool):
    pool.execute(abs, -1)
    pool.configure(2)
    assert pool.max_workers == 2
    assert not pool.running
    with pytest.raises(ValueError):
        pool.configure(0)


def test_shutdown_is_idempotent(pool):
    pool.shutdown()
    pool.shutdown()
    assert not pool.running
