"""Census service: class dispatch, auto detection and oracle verification of enumerators."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from config import settings
from core.models import Graph, IntervalRepresentation, RomanFunction
from enumerators.branch_core import EngineStats
from enumerators.chordal import enumerate_chordal
from enumerators.forest import enumerate_forest
from enumerators.interval import enumerate_interval
from enumerators.split_cobip import enumerate_cobipartite, enumerate_split
from services import generators, recognition
from services.oracle_service import enumerate_all

logger = logging.getLogger(__name__)


def diagnostics(g: Graph) -> str:
    """One-line summary of every recognizer, attached to class-mismatch errors."""
    split = recognition.is_split(g)
    cobip = recognition.is_cobipartite(g)
    parts = [
        f"n={g.n}",
        f"m={g.m}",
        f"forest={'yes' if recognition.is_forest(g) else 'no'}",
        f"split={'yes' if split else 'no'}",
        f"cobipartite={'yes' if cobip else 'no'}",
        f"chordal={'yes' if recognition.is_chordal(g) is not None else 'no'}",
    ]
    return " ".join(parts)


def detect_class(g: Graph) -> str:
    """First class of AUTO_CLASS_ORDER whose recognizer accepts g, else 'oracle'."""
    checks = {
        "forest": recognition.is_forest,
        "split": lambda h: recognition.is_split(h) is not None,
        "cobipartite": lambda h: recognition.is_cobipartite(h) is not None,
        "chordal": lambda h: recognition.is_chordal(h) is not None,
    }
    for name in settings.AUTO_CLASS_ORDER:
        if checks[name](g):
            return name
    return "oracle"


def resolve_class(g: Graph, graph_class: str, rep: Optional[IntervalRepresentation] = None) -> str:
    if graph_class not in settings.GRAPH_CLASSES:
        raise ValueError(f"Unknown class '{graph_class}'. Known: {', '.join(settings.GRAPH_CLASSES)}")
    if graph_class == "interval" and rep is None:
        raise ValueError("class 'interval' needs an interval representation")
    if graph_class == "auto":
        resolved = detect_class(g)
        logger.info("Auto-detected class %s (%s)", resolved, diagnostics(g))
        return resolved
    return graph_class


def enumerate_functions(g: Graph, graph_class: str = "auto", rep: Optional[IntervalRepresentation] = None,
                        stats: Optional[EngineStats] = None, **engine) -> Iterator[RomanFunction]:
    """Stream the minimal rdf of g with the enumerator of graph_class (auto-detected by default)."""
    resolved = resolve_class(g, graph_class, rep)
    if resolved == "oracle":
        return enumerate_all(g)
    if resolved == "interval":
        return enumerate_interval(g, rep, stats=stats, **engine)
    dispatch = {
        "forest": enumerate_forest,
        "split": enumerate_split,
        "cobipartite": enumerate_cobipartite,
        "chordal": enumerate_chordal,
    }
    return dispatch[resolved](g, stats=stats, **engine)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass
class VerifyResult:
    graph_class: str
    n: int
    expected: int
    actual: int
    missing: list[str] = field(default_factory=list)
    extra: list[str] = field(default_factory=list)
    duplicates: list[str] = field(default_factory=list)
    completions: int = 0
    label: str = ""

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.duplicates)

    @property
    def counterexample(self) -> Optional[str]:
        """Smallest differing function text, missing before extra before duplicate."""
        for group in (self.missing, self.extra, self.duplicates):
            if group:
                return group[0]
        return None


def verify(g: Graph, graph_class: str = "auto", rep: Optional[IntervalRepresentation] = None,
           label: str = "", **engine) -> VerifyResult:
    """Compare a class enumerator with the oracle as sets (and check it emits no duplicates)."""
    resolved = resolve_class(g, graph_class, rep)
    stats = EngineStats(ruleset=resolved)
    produced = [f.text for f in enumerate_functions(g, resolved, rep, stats=stats, **engine)]
    expected = {f.text for f in enumerate_all(g)}
    got = set(produced)
    duplicates = sorted({t for t in produced if produced.count(t) > 1})
    result = VerifyResult(
        graph_class=resolved,
        n=g.n,
        expected=len(expected),
        actual=len(produced),
        missing=sorted(expected - got),
        extra=sorted(got - expected),
        duplicates=duplicates,
        completions=stats.completions,
        label=label,
    )
    if not result.ok:
        logger.warning("Verification mismatch on %s: counterexample %s", label or resolved, result.counterexample)
    return result


def _verify_instance(instance: tuple[str, str, int, int]) -> VerifyResult:
    graph_class, family, n, seed = instance
    g, rep = generators.random_instance(family, n, seed)
    return verify(g, graph_class, rep, label=f"{family} n={n} seed={seed}")


def corpus_instances(graph_class: str, family: str, sizes, seeds) -> list[tuple[str, str, int, int]]:
    return [(graph_class, family, n, seed) for n in sizes for seed in seeds]


def verify_corpus(instances: list[tuple[str, str, int, int]], jobs: Optional[int] = None) -> list[VerifyResult]:
    """Verify every (class, random family, n, seed) instance, in worker processes when jobs > 1."""
    jobs = settings.DEFAULT_JOBS if jobs is None else jobs
    if jobs <= 1 or len(instances) < 2:
        return [_verify_instance(instance) for instance in instances]
    logger.debug("Verifying %d instances on %d workers", len(instances), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_instance, instances))
