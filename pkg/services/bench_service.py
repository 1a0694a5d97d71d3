"""Bench harness: counts, wall time and empirical inter-solution delay per family and size."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

import pandas as pd

from api.schemas import BenchRow
from config import settings
from services import generators
from services.census_service import enumerate_functions

logger = logging.getLogger(__name__)

COLUMNS = ["family", "n", "count", "wall_time", "max_inter_solution_delay", "count^(1/n)"]


def bench_one(family: str, size: int, graph_class: str = "auto") -> dict:
    g, rep = generators.generate(family, size)
    if graph_class == "interval" and rep is None:
        raise ValueError(f"family '{family}' has no interval representation")
    start = last = time.perf_counter()
    count, max_delay = 0, 0.0
    for _ in enumerate_functions(g, graph_class, rep):
        now = time.perf_counter()
        max_delay = max(max_delay, now - last)
        last = now
        count += 1
    wall = time.perf_counter() - start
    row = BenchRow(
        family=family, n=g.n, count=count, wall_time=wall, max_inter_solution_delay=max_delay,
        count_root=count ** (1.0 / g.n) if g.n else 1.0,
    )
    return row.model_dump(by_alias=True)


def _bench_task(args: tuple[str, int, str]) -> dict:
    return bench_one(*args)


def bench(family: str, sizes: Iterable[int], graph_class: str = "auto", jobs: Optional[int] = None) -> pd.DataFrame:
    """One row per size; sweeps run in worker processes when jobs > 1."""
    jobs = settings.DEFAULT_JOBS if jobs is None else jobs
    tasks = [(family, size, graph_class) for size in sizes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_task, tasks))
    else:
        rows = [bench_one(*t) for t in tasks]
    logger.debug("Bench %s: %d rows", family, len(rows))
    return pd.DataFrame(rows, columns=COLUMNS)
