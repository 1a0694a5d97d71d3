"""
RomanCensus command line: enumerate, count and verify minimal Roman dominating functions.
Usage:
  python manage.py <command> [options]

Commands:
  enumerate  (--input FILE | --intervals FILE | --gen FAMILY --n N)  [--class C] [--format lines|json|count]
  count      path N  |  forest L1 L2 ...  |  graph (--input FILE | --gen FAMILY --n N) [--class C]
  verify     (--input FILE | --gen FAMILY --n N)  |  --corpus FAMILY --sizes 5..9 --seeds 10 [--class C]
  analyze    [--ruleset interval|forest|chordal|split] [--vectors FILE] [--w1 X] [--w2 X] [--optimize] [--sqrt3 N]
  bench      --gen FAMILY --sizes 2..20 [--class C]
  generate   (--gen FAMILY --n N | --random FAMILY --n N) [--intervals-out FILE]

Common options: --seed, --jobs, --strict, --debug, --log-level, --oracle-cap.
Exit codes: 0 ok, 1 engine error, 2 bad input or vector DSL, 3 class mismatch,
4 oracle cap exceeded, 5 verification mismatch.
"""

import argparse
import logging
import sys
from typing import Optional

from api.schemas import (
    AlternateFormReport, FunctionRecord, OptimizationReport, RuleReport, RulesetReport, RunConfig,
    Sqrt3Report, Sqrt3Row, VerifyReport,
)
from config import settings
from core.errors import AuditViolation, ClassMismatchError, GraphParseError, OracleCapExceeded, StuckStateError
from core.models import WeightSet
from enumerators.branch_core import EngineStats
from services import analysis_service, bench_service, census_service, generators, graph_io, path_count_service
from services.recognition import graph_from_intervals

logger = logging.getLogger("manage")

EXIT_OK, EXIT_ENGINE, EXIT_INPUT, EXIT_CLASS, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5

# Random corpus family -> enumerator checked against the oracle under --class auto.
_CORPUS_CLASS = {"tree": "forest", "graph": "auto"}


def _configure_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=settings.LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _parse_range(text: str) -> list[int]:
    """'5..9' -> [5, 6, 7, 8, 9]; '4' -> [4]; '3,5,8' -> [3, 5, 8]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# Graph sources
# ---------------------------------------------------------------------------

def _config(args: argparse.Namespace) -> RunConfig:
    size = args.n if getattr(args, "n", None) is not None else getattr(args, "k", None)
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        intervals=getattr(args, "intervals", None),
        gen=getattr(args, "gen", None),
        size=size,
        graph_class=getattr(args, "graph_class", "auto"),
        output_format=getattr(args, "format", "lines"),
        seed=args.seed,
        jobs=args.jobs,
        strict=args.strict,
        debug=args.debug,
        oracle_cap=args.oracle_cap,
    )


def _load(cfg: RunConfig):
    rep = graph_io.load_intervals(cfg.intervals) if cfg.intervals else None
    if cfg.input:
        g = graph_io.load_graph(cfg.input)
    elif cfg.gen:
        g, generated = generators.generate(cfg.gen, cfg.size)
        rep = rep or generated
    elif rep is not None:
        g = graph_from_intervals(rep)
    else:
        raise ValueError("no graph given: use --input, --intervals or --gen")
    return g, rep


def _engine(cfg: RunConfig) -> dict:
    return {"strict": cfg.strict, "audit": cfg.debug}


def _diagnosed(e: ClassMismatchError, g) -> ClassMismatchError:
    return ClassMismatchError(e.graph_class, f"{e.diagnostics}; {census_service.diagnostics(g)}")


def _stream(g, rep, resolved: str, cfg: RunConfig, stats: EngineStats):
    """Class enumerators check membership lazily; mismatches get the recognizer summary attached."""
    engine = _engine(cfg) if resolved != "oracle" else {}
    try:
        yield from census_service.enumerate_functions(g, resolved, rep, stats=stats, **engine)
    except ClassMismatchError as e:
        raise _diagnosed(e, g) from None


def _report_stats(stats: EngineStats):
    if stats.nodes:
        print(f"# {stats.summary()}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    g, rep = _load(cfg)
    resolved = census_service.resolve_class(g, cfg.graph_class, rep)
    stats = EngineStats(ruleset=resolved)
    count = 0
    for f in _stream(g, rep, resolved, cfg, stats):
        count += 1
        if cfg.output_format == "lines":
            print(f.text)
        elif cfg.output_format == "json":
            print(FunctionRecord(f=f.text).model_dump_json())
    if cfg.output_format == "count":
        print(count)
    _report_stats(stats)
    print(f"# count={count} class={resolved}", file=sys.stderr)
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    if args.kind == "path":
        if len(args.values) != 1:
            raise ValueError("count path takes exactly one length")
        print(path_count_service.count_path(args.values[0]))
        return EXIT_OK
    if args.kind == "forest":
        if not args.values:
            raise ValueError("count forest takes at least one path length")
        print(path_count_service.count_path_forest(args.values))
        return EXIT_OK
    cfg = _config(args)
    g, rep = _load(cfg)
    resolved = census_service.resolve_class(g, cfg.graph_class, rep)
    stats = EngineStats(ruleset=resolved)
    count = sum(1 for _ in _stream(g, rep, resolved, cfg, stats))
    print(count)
    _report_stats(stats)
    print(f"# count={count} class={resolved}", file=sys.stderr)
    return EXIT_OK


def _verify_report(result: census_service.VerifyResult) -> VerifyReport:
    return VerifyReport(
        graph_class=result.graph_class, n=result.n, expected=result.expected, actual=result.actual,
        ok=result.ok, missing=result.missing, extra=result.extra, duplicates=result.duplicates,
        counterexample=result.counterexample, completions=result.completions, label=result.label,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.corpus:
        graph_class = cfg.graph_class
        if graph_class == "auto":
            graph_class = _CORPUS_CLASS.get(args.corpus, args.corpus)
        seeds = range(cfg.seed, cfg.seed + args.seeds)
        instances = census_service.corpus_instances(graph_class, args.corpus, _parse_range(args.sizes), seeds)
        results = census_service.verify_corpus(instances, jobs=cfg.jobs)
    else:
        g, rep = _load(cfg)
        try:
            results = [census_service.verify(g, cfg.graph_class, rep, **_engine(cfg))]
        except ClassMismatchError as e:
            raise _diagnosed(e, g) from None

    failures = 0
    for result in results:
        if not result.ok:
            failures += 1
            print(_verify_report(result).model_dump_json())
    completions = sum(r.completions for r in results)
    print(f"# verified={len(results)} failures={failures} completions={completions}", file=sys.stderr)
    if failures:
        return EXIT_MISMATCH
    if not args.corpus:
        print(_verify_report(results[0]).model_dump_json())
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.vectors:
        with open(args.vectors, "r", encoding="utf-8") as fh:
            rules = analysis_service.parse_vectors(fh.read())
        name = args.vectors
    else:
        rules = analysis_service.load_ruleset(args.ruleset)
        name = args.ruleset
    defaults = analysis_service.default_weights(args.ruleset)
    weights = WeightSet(
        args.w1 if args.w1 is not None else defaults.w1,
        args.w2 if args.w2 is not None else defaults.w2,
        label=name,
    )
    analysis = analysis_service.analyze_ruleset(rules, weights, args.family_cap)
    alternates = [] if args.vectors else [
        AlternateFormReport(name=n, stored_number=a, alternate_number=b, symbolically_equal=eq)
        for n, a, b, eq in analysis_service.alternate_forms(args.ruleset, weights)
    ]
    report = RulesetReport(
        ruleset=name, w1=weights.w1, w2=weights.w2,
        rules=[RuleReport(name=v.name, vector=v.text, number=analysis.numbers[v.name]) for v in rules],
        worst_rule=analysis.worst_rule, worst=analysis.worst, alternate_forms=alternates,
    )
    reports = [report]
    if args.optimize:
        bounds = analysis_service.default_bounds(args.ruleset if not args.vectors else "")
        best, worst = analysis_service.optimize_weights(rules, bounds, family_cap=args.family_cap)
        reports.append(OptimizationReport(ruleset=name, w1=best.w1, w2=best.w2, worst=worst, bounds=bounds))
    if args.sqrt3:
        check = analysis_service.verify_sqrt3_family(args.sqrt3)
        reports.append(Sqrt3Report(
            omega=check.omega, bound=check.bound, offending=check.offending,
            rows=[Sqrt3Row(n=n, number=x) for n, x in check.rows],
        ))
    for r in reports:
        print(r.model_dump_json() if args.format == "json" else r.to_text())
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    frame = bench_service.bench(args.gen, _parse_range(args.sizes), args.graph_class, jobs=args.jobs)
    sys.stdout.write(frame.to_csv(index=False))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    size = args.n if args.n is not None else args.k
    if size is None:
        raise ValueError("generate needs --n or --k")
    if args.random:
        g, rep = generators.random_instance(args.random, size, args.seed)
    elif args.gen:
        g, rep = generators.generate(args.gen, size)
    else:
        raise ValueError("generate needs --gen or --random")
    sys.stdout.write(graph_io.serialize_edge_list(g))
    if args.intervals_out:
        if rep is None:
            raise ValueError("this family has no interval representation")
        with open(args.intervals_out, "w", encoding="utf-8") as fh:
            fh.write(graph_io.serialize_intervals(rep))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS)
    p.add_argument("--strict", action="store_true", default=settings.STRICT_RULES,
                   help="stuck states and audit violations are fatal")
    p.add_argument("--debug", action="store_true", default=settings.DEBUG_AUDIT,
                   help="measure audit and duplicate-leaf check")
    p.add_argument("--log-level", default=settings.LOG_LEVEL)
    p.add_argument("--oracle-cap", type=int, default=settings.ORACLE_CAP)


def _add_source(p: argparse.ArgumentParser):
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--intervals", help="interval file")
    p.add_argument("--gen", choices=settings.GENERATOR_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--class", dest="graph_class", default="auto", choices=settings.GRAPH_CLASSES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="manage.py", description="Minimal Roman dominating function census")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream every minimal rdf")
    _add_source(p)
    p.add_argument("--format", default="lines", choices=settings.OUTPUT_FORMATS)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="exact counts for paths, path forests or a graph")
    p.add_argument("kind", choices=("path", "forest", "graph"))
    p.add_argument("values", type=int, nargs="*")
    _add_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="compare a class enumerator with the oracle")
    _add_source(p)
    p.add_argument("--corpus", choices=generators.RANDOM_FAMILIES, help="random corpus family")
    p.add_argument("--sizes", default="6..10")
    p.add_argument("--seeds", type=int, default=10, help="number of consecutive seeds from --seed")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="branching numbers of a rule set")
    p.add_argument("--ruleset", default="interval", choices=tuple(analysis_service.rulesets.RULESETS))
    p.add_argument("--vectors", help="vector DSL file")
    p.add_argument("--w1", type=float)
    p.add_argument("--w2", type=float)
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--sqrt3", type=int, metavar="N_MAX")
    p.add_argument("--family-cap", type=int, default=settings.FAMILY_CAP)
    p.add_argument("--format", default="text", choices=("text", "json"))
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="CSV of counts, timings and delays over a size range")
    p.add_argument("--gen", required=True, choices=settings.GENERATOR_FAMILIES)
    p.add_argument("--sizes", default="2..10")
    p.add_argument("--class", dest="graph_class", default="auto", choices=settings.GRAPH_CLASSES)
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("--gen", choices=settings.GENERATOR_FAMILIES)
    p.add_argument("--random", choices=generators.RANDOM_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--intervals-out")
    _add_common(p)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    settings.ORACLE_CAP = args.oracle_cap
    logger.debug("Running %s (oracle cap %d)", args.command, args.oracle_cap)
    try:
        return args.func(args)
    except ClassMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CLASS
    except OracleCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (StuckStateError, AuditViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ENGINE
    except (GraphParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
