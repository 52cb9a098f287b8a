"""Round-based frontier execution shared by the search-tree solvers.

Each round applies ``step`` to every instance of the frontier. A step returns
either a Verdict or a list of replacement instances. The first verdict in
frontier order wins; otherwise the replacement lists are concatenated in
frontier order. Results therefore do not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence


@dataclass(frozen=True)
class Verdict:
    value: Any


class GrowthError(AssertionError):
    pass


@dataclass
class RoundsResult:
    verdict: Any
    found: bool
    rounds: int
    frontier_peak: int
    max_growth: int


def default_workers() -> int:
    env = os.environ.get("PMAX_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_rounds(
    initial: Sequence[Any],
    step: Callable[[Any], Any],
    max_rounds: int,
    growth: int | None = None,
    workers: int = 1,
) -> RoundsResult:
    """Run at most ``max_rounds`` rounds; ``growth`` bounds each replacement list."""
    frontier = list(initial)
    peak = len(frontier)
    widest = 0
    rounds = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier and rounds < max_rounds:
            rounds += 1
            outcomes = list(pool.map(step, frontier)) if pool else [step(x) for x in frontier]
            nxt = []
            for out in outcomes:
                if isinstance(out, Verdict):
                    return RoundsResult(out.value, True, rounds, peak, widest)
                if growth is not None and len(out) > growth:
                    raise GrowthError(f"step produced {len(out)} instances, bound is {growth}")
                widest = max(widest, len(out))
                nxt.extend(out)
            frontier = nxt
            peak = max(peak, len(frontier))
    finally:
        if pool:
            pool.shutdown()
    return RoundsResult(None, False, rounds, peak, widest)
