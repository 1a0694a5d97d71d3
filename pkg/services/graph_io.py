"""Edge-list and interval file parsing, canonical serialization, file loading."""

from fractions import Fraction
from pathlib import Path

from core.errors import GraphParseError
from core.models import Graph, IntervalRepresentation


def _decode(text: bytes | str) -> str:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphParseError(f"input is not UTF-8: {e}") from e
    return text


def _content_lines(text: bytes | str) -> list[tuple[int, list[str]]]:
    """Numbered, tokenized lines with comments and blank lines dropped (CRLF tolerated)."""
    lines = []
    for number, raw in enumerate(_decode(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line.split()))
    return lines


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"{what} must be an integer, got {token!r}", line) from None


def _parse_rational(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(f"not a rational endpoint: {token!r}", line) from None


def parse_edge_list(text: bytes | str) -> Graph:
    """Parse 'n m' followed by m lines 'u v'. Duplicate edges collapse."""
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("empty input, expected header 'n m'")
    header_line, header = lines[0]
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", header_line)
    n = _parse_int(header[0], header_line, "n")
    m = _parse_int(header[1], header_line, "m")
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be nonnegative", header_line)

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise GraphParseError(f"header announces {m} edges, found {len(body)}", last)

    edges = set()
    for number, tokens in body:
        if len(tokens) != 2:
            raise GraphParseError("edge line must be 'u v'", number)
        u = _parse_int(tokens[0], number, "vertex id")
        v = _parse_int(tokens[1], number, "vertex id")
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphParseError(f"id {x} out of range [0, {n})", number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", number)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def parse_intervals(text: bytes | str) -> IntervalRepresentation:
    """Parse 'n' followed by n lines 'l r' (decimal or p/q rationals)."""
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("empty input, expected header 'n'")
    header_line, header = lines[0]
    if len(header) != 1:
        raise GraphParseError("header must be 'n'", header_line)
    n = _parse_int(header[0], header_line, "n")

    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else header_line
        raise GraphParseError(f"header announces {n} intervals, found {len(body)}", last)

    intervals = []
    for number, tokens in body:
        if len(tokens) != 2:
            raise GraphParseError("interval line must be 'l r'", number)
        l, r = _parse_rational(tokens[0], number), _parse_rational(tokens[1], number)
        if l > r:
            raise GraphParseError(f"interval has l > r ({tokens[0]} > {tokens[1]})", number)
        intervals.append((l, r))
    return IntervalRepresentation(tuple(intervals))


def serialize_edge_list(g: Graph) -> str:
    """Canonical form: header, then sorted edges with u < v, one per line."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_intervals(rep: IntervalRepresentation) -> str:
    lines = [str(rep.n)] + [f"{_format_rational(l)} {_format_rational(r)}" for l, r in rep.intervals]
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise GraphParseError(f"cannot read {path}: {e.strerror or e}") from e
    return parse_edge_list(data)


def load_intervals(path: str | Path) -> IntervalRepresentation:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise GraphParseError(f"cannot read {path}: {e.strerror or e}") from e
    return parse_intervals(data)
