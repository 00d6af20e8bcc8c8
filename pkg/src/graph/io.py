"""Plain-text graph and coloring files.

Graph file: first line "n m", then m lines "u v" with 0-based endpoints.
Coloring file: first line the S-sequence, second line the n classes.
'#' starts a comment; blank lines are ignored in both.
"""
from typing import List, Tuple

from ..data.schemas import PackingColoring, SSequence
from ..errors import GraphParseError, MalformedEdge, SequenceError
from ..packing.coloring import make_coloring, parse_sequence
from .core import Graph, build_graph


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((line_no, line))
    return out


def _ints(line_no: int, line: str, count: int) -> List[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphParseError(line_no, line, f"expected {count} integers")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(line_no, line, "not an integer") from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError(0, "", "missing 'n m' header")
    header_no, header = lines[0]
    n, m = _ints(header_no, header, 2)
    if n < 0 or m < 0:
        raise GraphParseError(header_no, header, "negative count")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(header_no, header, f"header announces {m} edges, file has {len(body)}")
    edges = [tuple(_ints(line_no, line, 2)) for line_no, line in body]
    try:
        return build_graph(n, edges)
    except MalformedEdge as e:
        offending = [(no, ln) for (no, ln), edge in zip(body, edges) if set(edge) == {e.u, e.v}]
        line_no, line = offending[-1] if offending else (header_no, header)
        raise GraphParseError(line_no, line, e.reason) from e


def format_graph(g: Graph, comment: str = "") -> str:
    lines = [f"# {row}" for row in comment.splitlines()] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path: str, comment: str = "") -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_graph(g, comment))


def parse_coloring(text: str) -> Tuple[SSequence, PackingColoring]:
    lines = _content_lines(text)
    if len(lines) != 2:
        raise GraphParseError(lines[-1][0] if lines else 0, "", "expected an S line and a class line")
    (s_no, s_line), (c_no, c_line) = lines
    try:
        s = parse_sequence(s_line)
    except SequenceError as e:
        raise GraphParseError(s_no, s_line, str(e)) from e
    classes = _ints(c_no, c_line, len(c_line.split()))
    if any(c < 1 for c in classes):
        raise GraphParseError(c_no, c_line, "classes are 1-based")
    return s, make_coloring(classes)


def format_coloring(s: SSequence, coloring: PackingColoring) -> str:
    return f"{s}\n{' '.join(str(c) for c in coloring.assignment)}\n"


def read_coloring(path: str) -> Tuple[SSequence, PackingColoring]:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_coloring(f.read())


def write_coloring(s: SSequence, coloring: PackingColoring, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_coloring(s, coloring))
