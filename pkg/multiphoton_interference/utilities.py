"""Helper utility functions shared by the experiment runners and the CLI"""
import concurrent.futures
import contextlib
from datetime import datetime
from typing import Callable
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypeVar

import numpy

from multiphoton_interference import exceptions
from multiphoton_interference import logger


ItemType = TypeVar("ItemType")
ResultType = TypeVar("ResultType")


@contextlib.contextmanager
def optional_parallelize(threads: int) -> Iterator[Callable]:
    """A bit of cheat, really

    A context manager that exposes a common interface for the caller that optionally
    enables/disables the usage of the parallel thread pooler depending on the value of
    the ``threads`` parameter. The yielded callable returns a future-like object with a
    ``result()`` method in both cases.
    """
    if threads > 0:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
            yield executor.submit
    else:
        yield _ImmediateResult


class _ImmediateResult:
    """Eagerly evaluated stand-in for :class:`concurrent.futures.Future`"""

    def __init__(self, func: Callable, *args):
        self._value = func(*args)

    def result(self):  # pylint: disable=missing-function-docstring
        return self._value


def parallel_map(
    func: Callable[[ItemType], ResultType],
    items: Sequence[ItemType],
    threads: int = 0,
) -> List[ResultType]:
    """Evaluate ``func`` over ``items``, optionally in a thread pool

    :param func: Function of one argument to evaluate
    :param items: Arguments to evaluate the function at
    :param threads: Number of worker threads, or ``0`` to evaluate sequentially
    :returns: Results in the order of ``items`` regardless of completion order
    """
    start = datetime.now()
    with optional_parallelize(threads) as executor:
        futures = [executor(func, item) for item in items]
        logger.debug(f"Waiting for {len(futures)} evaluations to finish...")
        results = [future.result() for future in futures]
    logger.debug(f"Finished {len(results)} evaluations in {datetime.now() - start}")
    return results


def scan_points(scan: Tuple[float, float, int]) -> numpy.ndarray:
    """Expand a ``(start, stop, steps)`` triple into an inclusive grid

    :raises InvalidParameterError: when fewer than two steps are requested
    """
    start, stop, steps = scan
    if int(steps) < 2:
        raise exceptions.InvalidParameterError(
            f"Scan needs at least two steps, got {steps}"
        )
    return numpy.linspace(float(start), float(stop), int(steps))


def periodic_points(period: float, steps: int) -> numpy.ndarray:
    """Uniform grid over one period with the end point excluded"""
    return numpy.linspace(0.0, period, int(steps), endpoint=False)
