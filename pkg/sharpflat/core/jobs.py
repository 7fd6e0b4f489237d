# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
sharpflat Jobs Module

Ordered parallel map over a thread pool. Used for admissible-prime scans
and randomized trial suites; results always come back in input order so
reports stay byte-identical across runs.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from sharpflat.core import log

T = TypeVar("T")
R = TypeVar("R")


class JobFailed(Exception):
    """Raised by ordered_map when a job raised; carries the job index."""

    def __init__(self, name: str, index: int, cause: BaseException):
        super().__init__(f"{name}[{index}] failed: {cause}")
        self.name = name
        self.index = index
        self.cause = cause


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    name: str = "job",
) -> List[R]:
    """
    Apply fn to every item, possibly in parallel, preserving order.

    Args:
        fn: pure function of one item
        items: inputs
        workers: pool size; 1 runs inline
        name: label used in log lines

    Returns:
        list of results, aligned with items

    Raises:
        JobFailed: first failing job in input order; the original
            exception is chained.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        out = []
        for i, item in enumerate(items):
            try:
                out.append(fn(item))
            except Exception as e:
                log.debug_safe(f"{name}[{i}] failed", e)
                raise JobFailed(name, i, e) from e
        return out

    log.debug(f"{name}: {len(items)} jobs on {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, item) for item in items]
        results: List[Optional[R]] = []
        for i, fut in enumerate(futures):
            try:
                results.append(fut.result())
            except Exception as e:
                log.debug_safe(f"{name}[{i}] failed", e)
                raise JobFailed(name, i, e) from e
    return results  # type: ignore[return-value]
