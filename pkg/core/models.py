"""Domain models: graphs, interval models, Roman functions and measure weights."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the dense vertex set 0..n-1."""
    n: int
    adjacency: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        adjacency = tuple(frozenset(nbrs) for nbrs in self.adjacency)
        if not adjacency and self.n:
            adjacency = tuple(frozenset() for _ in range(self.n))
        if len(adjacency) != self.n:
            raise ValueError(f"adjacency has {len(adjacency)} rows for {self.n} vertices")
        for v, nbrs in enumerate(adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in adjacency[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "adjacency", adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def sorted_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(nbrs)) for nbrs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with u < v."""
        return [(u, v) for u in range(self.n) for v in self.sorted_neighbors[u] if u < v]

    def open_neighborhood_of(self, vertices: Iterable[int]) -> set[int]:
        result: set[int] = set()
        for v in vertices:
            result |= self.adjacency[v]
        return result

    def closed_neighborhood_of(self, vertices: Iterable[int]) -> set[int]:
        vertices = set(vertices)
        return self.open_neighborhood_of(vertices) | vertices

    def complement(self) -> "Graph":
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - nbrs - {v} for v, nbrs in enumerate(self.adjacency)))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(vs[j] in self.adjacency[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self.adjacency[v] & vs) for v in vs)


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed interval [l_v, r_v] per vertex, in vertex order."""
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        normalized = tuple((Fraction(l), Fraction(r)) for l, r in self.intervals)
        for v, (l, r) in enumerate(normalized):
            if l > r:
                raise ValueError(f"interval of vertex {v} has l > r ({l} > {r})")
        object.__setattr__(self, "intervals", normalized)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]

    def intersects(self, u: int, v: int) -> bool:
        (lu, ru), (lv, rv) = self.intervals[u], self.intervals[v]
        return max(lu, lv) <= min(ru, rv)

    def leftmost_key(self, v: int) -> tuple[Fraction, Fraction, int]:
        """Order used for 'leftmost': smaller r, then smaller l, then smaller id."""
        l, r = self.intervals[v]
        return (r, l, v)


@dataclass(frozen=True)
class RomanFunction:
    """Total assignment V -> {0, 1, 2}."""
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        bad = [x for x in values if x not in (0, 1, 2)]
        if bad:
            raise ValueError(f"Roman function values must be 0, 1 or 2, got {bad[0]}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_text(cls, text: str) -> "RomanFunction":
        text = text.strip()
        if any(ch not in "012" for ch in text):
            raise ValueError(f"not a Roman function string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def text(self) -> str:
        return "".join(str(x) for x in self.values)

    def level(self, value: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x == value)

    @property
    def v0(self) -> frozenset[int]:
        return self.level(0)

    @property
    def v1(self) -> frozenset[int]:
        return self.level(1)

    @property
    def v2(self) -> frozenset[int]:
        return self.level(2)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class WeightSet:
    """Measure weights for V̄1 and V̄2 labels."""
    w1: float = 1.0
    w2: float = 1.0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        for name in ("w1", "w2"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
            object.__setattr__(self, name, value)
