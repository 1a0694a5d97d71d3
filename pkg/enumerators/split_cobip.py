"""Split and cobipartite enumerators.

In a split graph (C clique, I independent) the 2-set of a minimal rdf lies inside C or inside I.
Three disjoint parts are searched: one 2 in C, at least two 2s in C (private neighbours live in I)
and 2s only in I (private neighbours live in C). Cobipartite graphs (two cliques X, Y) reuse the
clique case once per side, plus the empty set, singletons and mixed pairs.
"""

import logging
from typing import Iterable, Iterator, Optional

from core.errors import ClassMismatchError
from core.models import Graph, RomanFunction, WeightSet
from enumerators.branch_core import (
    BranchState, Branching, EngineStats, Label, Rule, branch, initial_state, run,
)
from services import recognition
from services.analysis_service import load_ruleset
from services.rdf_service import from_v2, is_minimal_rdf

logger = logging.getLogger(__name__)

_PRIVATE = (Label.NOT2, Label.V0)
_WEIGHTS = WeightSet(1.0, 1.0, label="split")


def _declared() -> dict:
    return {v.name: v for v in load_ruleset("split")}


def _emit_if_minimal(g: Graph, twos: Iterable[int], stats: EngineStats) -> Iterator[RomanFunction]:
    f = from_v2(g, twos)
    stats.leaves += 1
    if is_minimal_rdf(g, f):
        stats.emitted += 1
        yield f


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

def clique_rule(clique: frozenset[int], private_side: frozenset[int]) -> Rule:
    """At least two 2s in the clique: each one needs a private neighbour on the other side.

    A clique vertex left out of V2 is dominated by those 2s, so it is finalized as 0.
    """
    ordered = sorted(clique)

    def rule(state: BranchState) -> Optional[Branching]:
        for v in ordered:
            if not state.is_undecided(v):
                continue
            privates = [u for u in state.live_neighbors(v, *_PRIVATE) if u in private_side]
            if not privates:
                return Branching("clique-vertex-no-private", (branch(zeros=(v,)),))
            if len(privates) >= 2:
                return Branching("clique-vertex-two-private", (branch(twos=(v,)), branch(zeros=(v,))))
            w = privates[0]
            rivals = [u for u in state.g.sorted_neighbors[w] if u != v and u in clique and state.is_undecided(u)]
            if rivals:
                return Branching("clique-vertex-shared-private",
                                 (branch(twos=(v,), outs=rivals), branch(zeros=(v,))))
            return Branching("clique-vertex-sole-private", (branch(twos=(v,)), branch(ones=(w,), zeros=(v,))))
        return None

    return rule


def independent_rule(independent: frozenset[int], clique: frozenset[int]) -> Rule:
    """All 2s in I: an I vertex outside V2 can never be dominated, so it takes value 1."""
    ordered = sorted(independent)

    def rule(state: BranchState) -> Optional[Branching]:
        for v in ordered:
            if not state.is_undecided(v):
                continue
            privates = [u for u in state.live_neighbors(v, *_PRIVATE) if u in clique]
            if not privates:
                return Branching("independent-vertex-no-private", (branch(ones=(v,)),))
            if len(privates) >= 2:
                return Branching("independent-vertex-two-private", (branch(twos=(v,)), branch(ones=(v,))))
            w = privates[0]
            rivals = [u for u in state.g.sorted_neighbors[w] if u != v and state.is_undecided(u)]
            if rivals:
                return Branching("independent-vertex-shared-private",
                                 (branch(twos=(v,), ones=rivals), branch(ones=(v,))))
            return Branching("independent-vertex-sole-private", (branch(twos=(v,)), branch(ones=(v, w))))
        return None

    return rule


def _clique_case(g: Graph, clique: frozenset[int], private_side: frozenset[int],
                 stats: EngineStats, label: str, **engine) -> Iterator[RomanFunction]:
    state = initial_state(g, outs=private_side)
    yield from run(
        state, [clique_rule(clique, private_side)], ruleset=label, weights=_WEIGHTS,
        declared=_declared(), leaf_filter=lambda twos: len(twos) >= 2, stats=stats, **engine,
    )


# ---------------------------------------------------------------------------
# Split
# ---------------------------------------------------------------------------

def _split_partition(g: Graph, partition) -> tuple[frozenset[int], frozenset[int]]:
    if partition is None:
        found = recognition.is_split(g)
        if found is None:
            raise ClassMismatchError("split", "degree sequence test failed")
        return found
    clique, independent = (frozenset(p) for p in partition)
    ok, message = recognition.validate_partition(g, clique, independent, "split")
    if not ok:
        raise ValueError(f"invalid split partition: {message}")
    return clique, independent


def enumerate_split(g: Graph, partition=None, stats: Optional[EngineStats] = None,
                    **engine) -> Iterator[RomanFunction]:
    """Every minimal rdf of a split graph; partition is (C, I) or None to recognize it."""
    clique, independent = _split_partition(g, partition)
    stats = stats if stats is not None else EngineStats(ruleset="split")
    logger.debug("Split partition C=%s I=%s", sorted(clique), sorted(independent))

    for c in sorted(clique):
        yield from _emit_if_minimal(g, (c,), stats)
    yield from _clique_case(g, clique, independent, stats, "split", **engine)
    state = initial_state(g, outs=clique)
    yield from run(
        state, [independent_rule(independent, clique)], ruleset="split", weights=_WEIGHTS,
        declared=_declared(), stats=stats, **engine,
    )


# ---------------------------------------------------------------------------
# Cobipartite
# ---------------------------------------------------------------------------

def _cobipartite_partition(g: Graph, partition) -> tuple[frozenset[int], frozenset[int]]:
    if partition is None:
        found = recognition.is_cobipartite(g)
        if found is None:
            raise ClassMismatchError("cobipartite", "complement is not bipartite")
        return found
    x, y = (frozenset(p) for p in partition)
    ok, message = recognition.validate_partition(g, x, y, "cobipartite")
    if not ok:
        raise ValueError(f"invalid cobipartite partition: {message}")
    return x, y


def enumerate_cobipartite(g: Graph, partition=None, stats: Optional[EngineStats] = None,
                          **engine) -> Iterator[RomanFunction]:
    """Every minimal rdf of a cobipartite graph; partition is (X, Y) or None to recognize it."""
    x, y = _cobipartite_partition(g, partition)
    stats = stats if stats is not None else EngineStats(ruleset="cobipartite")

    yield from _emit_if_minimal(g, (), stats)
    for v in g.vertices:
        yield from _emit_if_minimal(g, (v,), stats)
    for a in sorted(x):
        for b in sorted(y):
            yield from _emit_if_minimal(g, (a, b), stats)
    yield from _clique_case(g, x, y, stats, "cobipartite", **engine)
    yield from _clique_case(g, y, x, stats, "cobipartite", **engine)
