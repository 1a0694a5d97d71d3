"""Exhaustive reference enumeration of minimal rdf over all 2-sets."""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from config import settings
from core.errors import OracleCapExceeded
from core.models import Graph, RomanFunction
from services.rdf_service import from_v2, is_minimal_by_definition

logger = logging.getLogger(__name__)


def _check_cap(g: Graph, cap: int):
    if g.n > cap:
        raise OracleCapExceeded(g.n, cap)


def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adjacency[v]) for v in g.vertices]


def _is_minimal_mask(masks: list[int], subset: int) -> bool:
    """Every member s of the subset has a neighbour u outside it whose neighbourhood meets the subset in s only."""
    rest = subset
    while rest:
        low = rest & -rest
        s = low.bit_length() - 1
        rest ^= low
        candidates = masks[s] & ~subset
        while candidates:
            cbit = candidates & -candidates
            u = cbit.bit_length() - 1
            if masks[u] & subset == low:
                break
            candidates ^= cbit
        else:
            return False
    return True


def _subset_from_rank(rank: int, n: int) -> int:
    """Lexicographic rank over characteristic strings s_0 s_1 ... s_{n-1} -> vertex bitmask."""
    mask = 0
    for v in range(n):
        if rank >> (n - 1 - v) & 1:
            mask |= 1 << v
    return mask


def enumerate_all(g: Graph) -> Iterator[RomanFunction]:
    """Every minimal rdf exactly once, 2-sets in lexicographic order of their characteristic strings."""
    _check_cap(g, settings.ORACLE_CAP)
    masks = _neighbor_masks(g)
    for rank in range(1 << g.n):
        subset = _subset_from_rank(rank, g.n)
        if _is_minimal_mask(masks, subset):
            yield from_v2(g, (v for v in g.vertices if subset >> v & 1))


def _count_range(masks: list[int], n: int, lo: int, hi: int) -> int:
    return sum(1 for subset in range(lo, hi) if _is_minimal_mask(masks, subset))


def count_all(g: Graph, jobs: int | None = None) -> int:
    """Number of minimal rdf; the subset space is split across worker processes when jobs > 1."""
    _check_cap(g, settings.ORACLE_CAP)
    jobs = settings.DEFAULT_JOBS if jobs is None else jobs
    masks = _neighbor_masks(g)
    total = 1 << g.n
    if jobs <= 1 or g.n < 12:
        return _count_range(masks, g.n, 0, total)

    chunks = jobs * 4
    bounds = [total * i // chunks for i in range(chunks + 1)]
    logger.debug("Counting %d subsets in %d chunks on %d workers", total, chunks, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_count_range, masks, g.n, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        return sum(f.result() for f in futures)


def enumerate_by_definition(g: Graph) -> list[RomanFunction]:
    """Filter all 3^n functions with the definitional minimality test."""
    _check_cap(g, settings.DEFINITION_CAP)
    return [
        f for f in (RomanFunction(values) for values in itertools.product((0, 1, 2), repeat=g.n))
        if is_minimal_by_definition(g, f)
    ]
