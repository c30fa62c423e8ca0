"""Graph text format: a header line ``n m`` followed by ``m`` lines ``u v`` with ``0 <= u < v < n``."""

from pathlib import Path

from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InputError("graph text is empty")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as e:
        raise InputError(f"graph text contains a non-integer token: {e}") from e
    if len(header) != 2:
        raise InputError(f"header must be 'n m', got {rows[0]}")
    n, m = header
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} edge lines follow")
    for i, row in enumerate(body, start=2):
        if len(row) != 2:
            raise InputError(f"line {i}: expected 'u v', got {list(row)}")
        u, v = row
        if not u < v:
            raise InputError(f"line {i}: endpoints must satisfy u < v, got {u} {v}")
    return Graph.from_edges(n, body)  # type: ignore[arg-type]


def read_graph(path: Path | str) -> Graph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as e:
        bad = e.object[e.start]
        raise InputError(f"{path}: graph files are ASCII, found byte {bad:#04x} at offset {e.start}") from e
    return parse_graph(text)


def write_graph(g: Graph, path: Path | str) -> None:
    Path(path).write_text(format_graph(g), encoding="ascii", newline="\n")
