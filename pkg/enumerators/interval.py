"""Interval-graph enumerator driven by leftmost-vertex selection on an interval model.

The closed neighbourhood of the leftmost live vertex is a clique (every neighbour contains its
right endpoint), which is what makes the small branchings below complete. Weights: V̄1 = 1,
V̄2 = settings.INTERVAL_OMEGA.
"""

import logging
from typing import Iterable, Iterator, Optional

from config import settings
from core.errors import AuditViolation, ClassMismatchError
from core.models import Graph, IntervalRepresentation, RomanFunction, WeightSet
from enumerators.branch_core import (
    BranchState, Branching, EngineStats, Label, branch, initial_state, run,
)
from services.analysis_service import load_ruleset
from services.recognition import graph_from_intervals

logger = logging.getLogger(__name__)

A, NOT1, NOT2 = Label.A, Label.NOT1, Label.NOT2


class IntervalRules:
    """Branching rules in priority order; each returns a Branching or None."""

    def __init__(self, rep: IntervalRepresentation):
        self.rep = rep

    def leftmost(self, vertices: Iterable[int]) -> Optional[int]:
        vertices = list(vertices)
        return min(vertices, key=self.rep.leftmost_key) if vertices else None

    def rules(self) -> list:
        return [self.br_dom, self.br_leftmost]

    # -- BRDom ---------------------------------------------------------------

    def br_dom(self, state: BranchState) -> Optional[Branching]:
        v = self.leftmost(state.vertices(NOT1))
        if v is None:
            return None
        u = self.leftmost(state.live_neighbors(v, A, NOT2))
        if u is None:
            return None
        return Branching("BRDom", (branch(outs=(v,)), branch(twos=(v,), outs=(u,))))

    # -- rules on the leftmost vertex of A ∪ V̄2 -----------------------------

    def br_leftmost(self, state: BranchState) -> Optional[Branching]:
        v = self.leftmost(state.vertices(A, NOT2))
        if v is None:
            return None
        if state.label(v) is NOT2:
            return self._tilde_v2(state, v)

        a_nbrs = state.live_neighbors(v, A)
        not2_nbrs = state.live_neighbors(v, NOT2)
        if not a_nbrs:
            return Branching("BRNotDominatable", (branch(twos=(v,)), branch(outs=(v,))))
        if len(a_nbrs) >= 2:
            return Branching("BRP0", (branch(twos=(v,), outs=a_nbrs), branch(outs=(v,))))
        u = a_nbrs[0]
        if not2_nbrs:
            return Branching("BR_P2TildeV2", (
                branch(twos=(v,), outs=(u,)),
                branch(twos=(u,), outs=(v,)),
                branch(outs=(u, v)),
            ))
        u_a = state.live_neighbors(u, A)
        if len(u_a) >= 3:
            rest = [x for x in state.g.sorted_neighbors[u] if x != v and state.is_undecided(x)]
            return Branching("BR_P1", (branch(twos=(v,), outs=[u, *rest]), branch(outs=(v,))))
        if len(u_a) == 2:
            return self._path_end(state, v, u, next(x for x in u_a if x != v))
        return self._isolated_p2(state, v, u)

    def _path_end(self, state: BranchState, v1: int, v2: int, v3: int) -> Optional[Branching]:
        pendants = [u for u in state.live_neighbors(v3) if state.live_neighbors(u) == [v3]]
        if pendants:
            u = pendants[0]
            return Branching("BR_P2single", (
                branch(twos=(v1,), outs=(v2, v3)),
                branch(outs=(v1, v2)),
                branch(twos=(v2,), outs=(v1, v3, u)),
                branch(twos=(v2, v3), outs=(v1, u)),
            ))
        if state.live_neighbors(v2, NOT2) or state.label(v3) is not A:
            return None
        candidates = [
            u for u in state.live_neighbors(v3, A)
            if u not in (v1, v2) and len(state.live_neighbors(u)) >= 2
        ]
        u = self.leftmost(candidates)
        if u is None:
            return self._isolated_p3(state, v1, v2, v3)
        closed_u = [x for x in (u, *state.g.sorted_neighbors[u]) if x != v3 and state.is_undecided(x)]
        return Branching("BRP3", (
            branch(twos=(v1,), outs=(v2, v3)),
            branch(outs=(v1, v2)),
            branch(twos=(v2,), outs=(v1, v3)),
            branch(twos=(v2, v3), outs=[v1, *closed_u]),
        ))

    # -- isolated short paths ------------------------------------------------
    # Neither BR_P2TildeV2 / BR_P1 nor BR_P2single / BRP3 covers a live component that is
    # a bare A-A edge or A-A-A path. Anything else reaching these points stays stuck.

    def _isolated_p2(self, state: BranchState, v: int, u: int) -> Optional[Branching]:
        if state.live_neighbors(v) != [u] or state.live_neighbors(u) != [v]:
            return None
        return Branching("BR_IsolatedP2", (
            branch(twos=(v,), outs=(u,)),
            branch(twos=(u,), outs=(v,)),
            branch(outs=(v, u)),
        ))

    def _isolated_p3(self, state: BranchState, v1: int, v2: int, v3: int) -> Optional[Branching]:
        if (state.live_neighbors(v1) != [v2] or state.live_neighbors(v3) != [v2]
                or sorted(state.live_neighbors(v2)) != sorted((v1, v3))
                or any(state.label(x) is not A for x in (v1, v2, v3))):
            return None
        return Branching("BR_IsolatedP3", (
            branch(twos=(v2,), outs=(v1, v3)),
            branch(twos=(v1,), outs=(v2, v3)),
            branch(twos=(v3,), outs=(v1, v2)),
            branch(outs=(v1, v2, v3)),
        ))

    def _tilde_v2(self, state: BranchState, v: int) -> Optional[Branching]:
        a_nbrs = state.live_neighbors(v, A)
        if not a_nbrs:
            return None
        undecided = [u for u in state.g.sorted_neighbors[v] if state.is_undecided(u)]
        branches = [branch(twos=(u,), outs=[x for x in undecided if x != u]) for u in a_nbrs]
        branches.append(branch(outs=undecided))
        return Branching("BR_TildeV2", tuple(branches), k=len(a_nbrs))

    # -- debug structural check ---------------------------------------------

    def structural_check(self, state: BranchState):
        """V̄1 and V̄2 vertices sit in the closed neighbourhood of the leftmost live vertex."""
        live = state.vertices(A, NOT1, NOT2)
        v = self.leftmost(live)
        if v is None:
            return
        closed = state.g.closed_neighborhood(v)
        stray = [u for u in live if state.label(u) is not A and u not in closed]
        if stray:
            message = f"marked vertices {stray} outside N[{v}] at state {state.text()}"
            logger.warning("Interval structure: %s", message)
            if settings.STRICT_RULES:
                raise AuditViolation(message)


def weights() -> WeightSet:
    return WeightSet(1.0, settings.INTERVAL_OMEGA, label="interval")


def enumerate_interval(g: Graph, rep: IntervalRepresentation, stats: Optional[EngineStats] = None,
                       **engine) -> Iterator[RomanFunction]:
    """Every minimal rdf of the interval graph g, given an interval model of it."""
    if rep.n != g.n:
        raise ClassMismatchError("interval", f"representation has {rep.n} intervals for {g.n} vertices")
    if graph_from_intervals(rep) != g:
        raise ClassMismatchError("interval", "intersection graph of the representation differs from the input")
    rules = IntervalRules(rep)
    declared = {v.name: v for v in load_ruleset("interval")}
    yield from run(
        initial_state(g), rules.rules(), ruleset="interval", weights=weights(), declared=declared,
        stats=stats, check=rules.structural_check, fallback=None, **engine,
    )
