"""Roman dominating functions: weight, rdf test, minimality, reconstruction from the 2-set."""

import json
from typing import Iterable

from core.models import Graph, RomanFunction


def _check_length(g: Graph, f: RomanFunction):
    if f.n != g.n:
        raise ValueError(f"function has {f.n} values for a graph of order {g.n}")


def weight(f: RomanFunction) -> int:
    return len(f.v1) + 2 * len(f.v2)


def is_rdf(g: Graph, f: RomanFunction) -> bool:
    """Every vertex labelled 0 has a neighbour labelled 2."""
    _check_length(g, f)
    return all(
        any(f.values[u] == 2 for u in g.adjacency[v])
        for v in g.vertices if f.values[v] == 0
    )


def private_neighborhood(g: Graph, dominators: Iterable[int], v: int) -> frozenset[int]:
    """N[v] minus N[D \\ {v}]."""
    dominators = frozenset(dominators)
    if v not in dominators:
        raise ValueError(f"vertex {v} is not in the dominating set")
    return frozenset(g.closed_neighborhood(v) - g.closed_neighborhood_of(dominators - {v}))


def is_minimal_rdf(g: Graph, f: RomanFunction) -> bool:
    """Three conditions on G' = G[V0 ∪ V2]:

    1. no vertex of V1 lies in N[V2];
    2. every v in V2 has a G'-private vertex other than itself;
    3. V2 is a minimal dominating set of G'.
    """
    _check_length(g, f)
    v0, v1, v2 = f.v0, f.v1, f.v2
    if g.closed_neighborhood_of(v2) & v1:
        return False

    sub_vertices = v0 | v2
    sub = {v: g.adjacency[v] & sub_vertices for v in sub_vertices}

    def closed(vertices: Iterable[int]) -> set[int]:
        result: set[int] = set()
        for x in vertices:
            result |= sub[x]
            result.add(x)
        return result

    if closed(v2) != sub_vertices:
        return False
    for v in v2:
        others = closed(v2 - {v})
        private = (sub[v] | {v}) - others
        if not (private - {v}):
            return False
        if others == sub_vertices:
            return False
    return True


def from_v2(g: Graph, twos: Iterable[int]) -> RomanFunction:
    """2 on S, 0 on N(S) \\ S, 1 elsewhere."""
    twos = frozenset(twos)
    zeros = g.open_neighborhood_of(twos) - twos
    return RomanFunction(tuple(2 if v in twos else 0 if v in zeros else 1 for v in g.vertices))


def has_external_private_neighbors(g: Graph, twos: Iterable[int]) -> bool:
    """Each s in S has a neighbour u outside S with N(u) ∩ S = {s}."""
    twos = frozenset(twos)
    for s in twos:
        if not any(u not in twos and g.adjacency[u] & twos == {s} for u in g.adjacency[s]):
            return False
    return True


def is_minimal_by_definition(g: Graph, f: RomanFunction) -> bool:
    """rdf with no pointwise-smaller rdf.

    Lowering a single value (2→1, 2→0, 1→0) is enough: every rdf below f is reachable
    from f by single-vertex decreases through rdfs, since raising values keeps the rdf property.
    """
    if not is_rdf(g, f):
        return False
    values = list(f.values)
    for v, x in enumerate(f.values):
        for lower in range(x):
            values[v] = lower
            if is_rdf(g, RomanFunction(tuple(values))):
                return False
        values[v] = x
    return True


def function_to_json(f: RomanFunction) -> str:
    return json.dumps(list(f.values))


def function_from_json(text: str) -> RomanFunction:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of 0/1/2 values")
    return RomanFunction(tuple(data))
