"""Plain-text hypergraph format.

    hg <n> <r> <m>
    <v_1> ... <v_r>      (m lines)

Blank lines and lines starting with `#` are ignored.
"""

from __future__ import annotations

from pathlib import Path

from hyperturan.errors import InvalidHypergraphError, ParseError
from hyperturan.hypergraph.core import Hypergraph, new_hypergraph


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"hg {h.n} {h.r} {h.e}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]


def _ints(fields: list[str], number: int) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", number) from None


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the `hg` format; errors carry the 1-based line number."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input, expected header 'hg <n> <r> <m>'", 1)
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 4 or fields[0] != "hg":
        raise ParseError(f"expected header 'hg <n> <r> <m>', got {header!r}", number)
    n, r, m = _ints(fields[1:], number)
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else number
        raise ParseError(f"header declares {m} edges, found {len(body)}", last)
    try:
        new_hypergraph(n, r, [])
    except InvalidHypergraphError as exc:
        raise ParseError(str(exc), number) from exc
    edges: list[list[int]] = []
    seen: set[tuple[int, ...]] = set()
    for number, line in body:
        edge = _ints(line.split(), number)
        try:
            # arity and range of this line alone
            new_hypergraph(n, r, [edge])
        except InvalidHypergraphError as exc:
            raise ParseError(str(exc), number) from exc
        key = tuple(sorted(edge))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", number)
        seen.add(key)
        edges.append(edge)
    return new_hypergraph(n, r, edges)


def read_hypergraph(path: Path) -> Hypergraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8 text at byte {exc.start}: {path}") from exc
    return parse_hypergraph(text)


def write_hypergraph(h: Hypergraph, path: Path) -> Path:
    path = Path(path)
    path.write_text(format_hypergraph(h), encoding="utf-8")
    return path
