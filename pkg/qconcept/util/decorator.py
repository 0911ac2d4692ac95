"""Decorator functions."""
import functools
import logging
import time

logger = logging.getLogger(__name__)


def timer(func):
    """Times a function and returns a tuple of (return of func, n_seconds).

    Notes:
        The duration is also logged at DEBUG level under the wrapped function's name.
    """

    @functools.wraps(func)
    def _timit(*args, **kwargs):
        t0 = time.perf_counter()
        item = func(*args, **kwargs)
        n_seconds = round(time.perf_counter() - t0, 3)
        logger.debug(f"{func.__name__} - {n_seconds}s")
        return item, n_seconds

    return _timit
