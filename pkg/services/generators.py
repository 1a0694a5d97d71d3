"""Deterministic graph families and seeded random corpora."""

import itertools
from fractions import Fraction

import networkx as nx
import numpy as np

from config import settings
from core.models import Graph, IntervalRepresentation
from services.recognition import graph_from_intervals


def _rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


def _check_size(family: str, size: int, minimum: int = 1):
    if size < minimum:
        raise ValueError(f"{family} needs size >= {minimum}, got {size}")


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def path(n: int) -> tuple[Graph, IntervalRepresentation]:
    """P_n with staircase intervals [i, i+1]."""
    _check_size("path", n)
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    rep = IntervalRepresentation(tuple((Fraction(i), Fraction(i + 1)) for i in range(n)))
    return g, rep


def cycle(n: int) -> Graph:
    _check_size("cycle", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    _check_size("star", n)
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _check_size("complete", n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def p2_forest(k: int) -> tuple[Graph, IntervalRepresentation]:
    """k disjoint edges (2i, 2i+1), modelled by [3i, 3i+1] and [3i+1, 3i+2]."""
    _check_size("p2_forest", k)
    g = Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])
    intervals = []
    for i in range(k):
        intervals += [(Fraction(3 * i), Fraction(3 * i + 1)), (Fraction(3 * i + 1), Fraction(3 * i + 2))]
    return g, IntervalRepresentation(tuple(intervals))


def split_lb(k: int) -> Graph:
    """Clique 0..k-1, independent set k..2k-1, perfect matching i -- k+i."""
    _check_size("split_lb", k)
    edges = list(itertools.combinations(range(k), 2)) + [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def cobip_lb(k: int) -> Graph:
    """Two k-cliques 0..k-1 and k..2k-1 joined by the matching i -- k+i."""
    _check_size("cobip_lb", k)
    edges = (
        list(itertools.combinations(range(k), 2))
        + list(itertools.combinations(range(k, 2 * k), 2))
        + [(i, k + i) for i in range(k)]
    )
    return Graph.from_edges(2 * k, edges)


def split_lower_bound_count(k: int) -> int:
    return 2 * 2**k - 1


def cobipartite_lower_bound_count(k: int) -> int:
    """Closed form 2*2^k + k^2 - 1; the oracle agrees for k >= 3 only."""
    return 2 * 2**k + k * k - 1


def generate(family: str, size: int) -> tuple[Graph, IntervalRepresentation | None]:
    """Build a named family. Interval families also return their representation."""
    if family == "path":
        return path(size)
    if family == "p2_forest":
        return p2_forest(size)
    builders = {"cycle": cycle, "star": star, "split_lb": split_lb, "cobip_lb": cobip_lb}
    if family not in builders:
        raise ValueError(f"Unknown family '{family}'. Known: {', '.join(settings.GENERATOR_FAMILIES)}")
    return builders[family](size), None


# ---------------------------------------------------------------------------
# Random corpora
# ---------------------------------------------------------------------------

def _relabel(n: int, edges, rng: np.random.Generator) -> Graph:
    perm = rng.permutation(n)
    return Graph.from_edges(n, [(int(perm[u]), int(perm[v])) for u, v in edges])


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    _check_size("random_tree", n)
    rng = _rng(seed)
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, tree.edges())


def random_forest(n: int, seed=None, components: int | None = None) -> Graph:
    _check_size("random_forest", n)
    rng = _rng(seed)
    if components is None:
        components = int(rng.integers(1, max(2, n // 3) + 1))
    components = max(1, min(components, n))
    cuts = sorted(int(x) for x in rng.choice(np.arange(1, n), size=components - 1, replace=False)) if components > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    edges, offset = [], 0
    for size in sizes:
        edges += [(u + offset, v + offset) for u, v in random_tree(size, rng).edges()]
        offset += size
    return _relabel(n, edges, rng)


def random_split(n: int, seed=None, p: float = 0.5) -> Graph:
    _check_size("random_split", n)
    rng = _rng(seed)
    c = int(rng.integers(1, n + 1))
    edges = list(itertools.combinations(range(c), 2))
    for v in range(c, n):
        edges += [(u, v) for u in range(c) if rng.random() < p]
    return _relabel(n, edges, rng)


def random_cobipartite(n: int, seed=None, p: float = 0.5) -> Graph:
    _check_size("random_cobipartite", n)
    rng = _rng(seed)
    a = int(rng.integers(0, n + 1))
    edges = list(itertools.combinations(range(a), 2)) + list(itertools.combinations(range(a, n), 2))
    edges += [(u, v) for u in range(a) for v in range(a, n) if rng.random() < p]
    return _relabel(n, edges, rng)


def random_interval(n: int, seed=None) -> tuple[Graph, IntervalRepresentation]:
    """Intervals over 2n distinct integer endpoints, so no two endpoints coincide."""
    _check_size("random_interval", n)
    rng = _rng(seed)
    points = rng.permutation(2 * n)
    intervals = []
    for v in range(n):
        a, b = int(points[2 * v]), int(points[2 * v + 1])
        intervals.append((Fraction(min(a, b)), Fraction(max(a, b))))
    rep = IntervalRepresentation(tuple(intervals))
    return graph_from_intervals(rep), rep


def random_chordal(n: int, seed=None, k: int | None = None) -> Graph:
    """k-tree growth: every new vertex attaches to a nonempty subset (size <= k) of an existing clique."""
    _check_size("random_chordal", n)
    rng = _rng(seed)
    if k is None:
        k = int(rng.integers(1, 4))
    cliques: list[tuple[int, ...]] = [(0,)]
    edges = []
    for v in range(1, n):
        base = cliques[int(rng.integers(0, len(cliques)))]
        size = int(rng.integers(1, min(k, len(base)) + 1))
        attach = tuple(int(x) for x in rng.choice(np.array(base), size=size, replace=False))
        edges += [(u, v) for u in attach]
        cliques.append(tuple(sorted(attach + (v,))))
    return _relabel(n, edges, rng)


def random_graph(n: int, seed=None, p: float = 0.4) -> Graph:
    _check_size("random_graph", n)
    rng = _rng(seed)
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


RANDOM_FAMILIES = ("tree", "forest", "split", "cobipartite", "interval", "chordal", "graph")


def random_instance(family: str, n: int, seed=None) -> tuple[Graph, IntervalRepresentation | None]:
    """One seeded corpus instance; only the interval family carries a representation."""
    if family == "interval":
        return random_interval(n, seed)
    builders = {
        "tree": random_tree, "forest": random_forest, "split": random_split,
        "cobipartite": random_cobipartite, "chordal": random_chordal, "graph": random_graph,
    }
    if family not in builders:
        raise ValueError(f"Unknown random family '{family}'. Known: {', '.join(RANDOM_FAMILIES)}")
    return builders[family](n, seed), None
