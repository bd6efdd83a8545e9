"""
Reading and writing the .hg text format.

    # optional comment lines
    r n m
    v1 v2 ... vr      (m lines, strictly increasing vertex ids)

Graphs use the same format with r = 2. Writers emit an optional block of
"# key=value" metadata comments above the header and replace the target
file atomically.
"""

import os
import tempfile
from pathlib import Path
from typing import Mapping, Optional, Union

from spanhyper.core.hypergraph import Hypergraph, make_hypergraph
from spanhyper.errors import HypergraphError, ParseError

PathLike = Union[str, Path]


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line.strip()!r}", lineno)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse .hg text into a Hypergraph (a Graph when r = 2)."""
    header = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        values = _ints(line, lineno)

        if header is None:
            if len(values) != 3:
                raise ParseError("header must be 'r n m'", lineno)
            r, n, m = values
            if r < 2:
                raise ParseError(f"uniformity must be at least 2, got {r}", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            if m < 0:
                raise ParseError(f"edge count must be non-negative, got {m}", lineno)
            header = (r, n, m)
            continue

        r, n, m = header
        if len(values) != r:
            raise ParseError(f"edge has {len(values)} vertices, expected {r}", lineno)
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ParseError("edge vertices must be strictly increasing", lineno)
        if values[0] < 1 or values[-1] > n:
            raise ParseError(f"vertex outside 1..{n}", lineno)
        edge = tuple(values)
        if edge in seen:
            raise ParseError(f"duplicate edge {' '.join(map(str, edge))}", lineno)
        seen.add(edge)
        edges.append(edge)
        if len(edges) > m:
            raise ParseError(f"more than the declared {m} edges", lineno)

    if header is None:
        raise ParseError("missing 'r n m' header")
    r, n, m = header
    if len(edges) != m:
        raise ParseError(f"declared {m} edges, found {len(edges)}")
    try:
        return make_hypergraph(r, n, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc))


def format_hypergraph(h: Hypergraph, metadata: Optional[Mapping[str, object]] = None) -> str:
    lines = [f"# {key}={value}" for key, value in (metadata or {}).items()]
    lines.append(f"{h.r} {h.n} {h.m}")
    lines.extend(" ".join(map(str, edge)) for edge in h.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: PathLike) -> Hypergraph:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Hypergraph file not found: {path}")
    return parse_hypergraph(path.read_text())


def atomic_write_text(path: PathLike, text: str) -> Path:
    """Write text to a temp file in the target directory, then rename over path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_hypergraph(
    h: Hypergraph, path: PathLike, metadata: Optional[Mapping[str, object]] = None
) -> Path:
    return atomic_write_text(path, format_hypergraph(h, metadata))
