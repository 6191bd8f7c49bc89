#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


"""
Process-parallel map for the enumeration-heavy classification steps. Results
come back in input order, so reports do not depend on the worker count.
"""

import logging
import multiprocessing as mp
from typing import Callable, Iterable, List, TypeVar


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def launch_map(
    func: Callable[[T], R],
    items: Iterable[T],
    num_workers: int = 1,
    chunksize: int = 1,
) -> List[R]:
    """
    ``[func(x) for x in items]``, spread over ``num_workers`` spawned
    processes when more than one is requested. ``func`` must be picklable.
    """
    items = list(items)
    if num_workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    num_workers = min(num_workers, len(items))
    logger.info(
        f"Launch {func.__module__}.{func.__name__} on {len(items)} items"
        f" with num_workers: {num_workers}"
    )
    ctx = mp.get_context("spawn")
    with ctx.Pool(num_workers) as pool:
        return pool.map(func, items, chunksize=chunksize)
