import logging
from multiprocessing import Pool, cpu_count
from typing import Callable

import numpy as np

logger = logging.getLogger(__name__)


def set_cores(cores: int = 0, divisor: int = 2) -> int:
    """Returns how many worker processes the brute-force strategy may use.

    Args:
        cores: Requested workers, ``0`` meaning ``cpu_count() // divisor``.
        divisor: Share of the machine left idle when ``cores=0``.

    Notes:
        Falls back to one worker when the CPU count is unknown."""

    if cores == 0:
        try:
            cores = max(1, int(cpu_count() / divisor))
        except NotImplementedError:
            cores = 1
    logger.debug(f"{cores} max")
    return cores


def limit_cores(cores: int, ls: list) -> int:
    """Limits ``cores`` to always be equal or lesser than the length of ``ls``."""

    return max(1, min(cores, len(ls)))


def split(ls: list, n: int) -> list:
    """Splits a list into ``n`` contiguous chunks of near-equal length."""

    return [[ls[i] for i in idx] for idx in np.array_split(np.arange(len(ls)), n)]


def run(ls: list, func: Callable, cores: int) -> list:
    """Splits a list into 1 chunk per core and runs a function in parallel.

    Args:
        ls: Items to process.
        func: Picklable function taking a list chunk and returning a list.
        cores: Number of cores to use (``1`` runs in-process).

    Notes:
        Chunk results are concatenated in chunk order, so the output order only
        depends on ``func``."""

    cores = limit_cores(cores, ls)
    if cores == 1:
        return list(func(ls))
    with Pool(cores) as pool:
        results = pool.map(func, split(ls, cores))
    return [x for chunk in results for x in chunk]
