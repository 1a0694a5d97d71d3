"""Graph-class recognition: forests, split, cobipartite, chordal, tiny interval graphs."""

import itertools
from collections import deque
from fractions import Fraction
from typing import Iterable, Optional

import networkx as nx

from config import settings
from core.models import Graph, IntervalRepresentation


def graph_from_intervals(rep: IntervalRepresentation) -> Graph:
    """Intersection graph of closed intervals; touching endpoints count as adjacent."""
    edges = [(u, v) for u, v in itertools.combinations(range(rep.n), 2) if rep.intersects(u, v)]
    return Graph.from_edges(rep.n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    components = []
    for start in g.vertices:
        if seen[start]:
            continue
        seen[start] = True
        queue, component = deque([start]), []
        while queue:
            v = queue.popleft()
            component.append(v)
            for u in g.sorted_neighbors[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        components.append(sorted(component))
    return components


# ---------------------------------------------------------------------------
# Recognizers
# ---------------------------------------------------------------------------

def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def is_split(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Degree-sequence test; returns (C, I) with C a clique and I independent, or None."""
    if g.n == 0:
        return frozenset(), frozenset()
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if degrees[i - 1] >= i - 1)
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None
    clique, independent = frozenset(order[:m]), frozenset(order[m:])
    if not (g.is_clique(clique) and g.is_independent(independent)):
        return None
    return clique, independent


def is_cobipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """2-colours the complement; returns two cliques (X, Y) covering V, or None."""
    h = g.complement()
    colour: list[Optional[int]] = [None] * g.n
    for start in g.vertices:
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in h.sorted_neighbors[v]:
                if colour[u] is None:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    x = frozenset(v for v in g.vertices if colour[v] == 0)
    return x, frozenset(g.vertices) - x


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS (largest number of visited neighbours first, ties by smallest id)."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in g.vertices if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for u in g.adjacency[v]:
            if not visited[u]:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    """Each vertex's later neighbours, minus the earliest of them, must be adjacent to that one."""
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adjacency[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        if any(u != parent and u not in g.adjacency[parent] for u in later):
            return False
    return True


def is_chordal(g: Graph) -> Optional[list[int]]:
    """Perfect elimination ordering from reversed MCS, or None when g has a chordless cycle."""
    order = list(reversed(maximum_cardinality_search(g)))
    return order if is_perfect_elimination_ordering(g, order) else None


def simplicial_vertices(g: Graph, alive: Iterable[int]) -> list[int]:
    alive = frozenset(alive)
    return [v for v in sorted(alive) if g.is_clique(g.adjacency[v] & alive)]


def validate_partition(g: Graph, first: Iterable[int], second: Iterable[int], kind: str) -> tuple[bool, str]:
    """Check a (C, I) split partition or an (X, Y) cobipartite partition. Returns (ok, message)."""
    a, b = frozenset(first), frozenset(second)
    if a & b:
        return False, f"parts overlap on {sorted(a & b)}"
    if a | b != frozenset(g.vertices):
        return False, f"parts miss vertices {sorted(frozenset(g.vertices) - a - b)}"
    if not g.is_clique(a):
        return False, "first part is not a clique"
    if kind == "split":
        if not g.is_independent(b):
            return False, "second part is not independent"
    elif kind == "cobipartite":
        if not g.is_clique(b):
            return False, "second part is not a clique"
    else:
        raise ValueError(f"Unknown partition kind '{kind}'")
    return True, ""


# ---------------------------------------------------------------------------
# Tiny interval recognizer
# ---------------------------------------------------------------------------

def interval_model_bruteforce(g: Graph) -> Optional[IntervalRepresentation]:
    """Search orderings of the maximal cliques in which every vertex's cliques are consecutive.

    Vertex v gets the interval [first, last] over the positions of its cliques.
    """
    if g.n > settings.INTERVAL_BRUTEFORCE_MAX_N:
        raise ValueError(f"brute-force interval recognition is limited to n <= {settings.INTERVAL_BRUTEFORCE_MAX_N}")
    if g.n == 0:
        return IntervalRepresentation(())
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(h))

    # 0 = not started, 1 = open, 2 = closed
    state = [0] * g.n
    first = [0] * g.n
    last = [0] * g.n
    used = [False] * len(cliques)

    def place(position: int) -> bool:
        if position == len(cliques):
            return True
        for i, clique in enumerate(cliques):
            if used[i]:
                continue
            members = set(clique)
            if any(state[v] == 2 for v in members):
                continue
            saved = (state[:], first[:], last[:])
            for v in g.vertices:
                if state[v] == 1 and v not in members:
                    state[v] = 2
            for v in members:
                if state[v] == 0:
                    state[v] = 1
                    first[v] = position
                last[v] = position
            used[i] = True
            if place(position + 1):
                return True
            used[i] = False
            state[:], first[:], last[:] = saved
        return False

    if not place(0):
        return None
    rep = IntervalRepresentation(tuple((Fraction(first[v]), Fraction(last[v])) for v in g.vertices))
    return rep if graph_from_intervals(rep) == g else None
