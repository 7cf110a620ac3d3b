"""Plain-text hypergraph files.

Format: an optional header ``k <k>`` on the first content line, then one
edge per line as whitespace-separated vertex tokens. ``#`` starts a comment
that runs to the end of the line. LF and CRLF line endings are accepted.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .core import Hypergraph, build_hypergraph
from .errors import DuplicateEdge, EmptyEdgeList, NonUniformEdge, ParseError


def parse_text(text: str) -> Hypergraph:
    k = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if k is None and not edges and tokens[0] == "k" and len(tokens) == 2:
            try:
                k = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad uniformity {tokens[1]!r}", lineno) from None
            if k < 2:
                raise ParseError(f"uniformity must be at least 2, got {k}", lineno)
            continue
        if k is None:
            k = len(tokens)
        if len(tokens) != k or len(set(tokens)) != k:
            raise NonUniformEdge(f"line {lineno}: expected {k} distinct vertices, got {tokens}")
        key = frozenset(tokens)
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge repeats line {seen[key]}")
        seen[key] = lineno
        edges.append(tokens)
    if not edges:
        raise EmptyEdgeList("no edges in input")
    return build_hypergraph(k, edges)


def parse(path) -> Hypergraph:
    """Read a hypergraph file; ``-`` reads standard input."""
    if str(path) == "-":
        return parse_text(sys.stdin.read())
    return parse_text(Path(path).read_text(encoding="utf-8"))


def serialize(h: Hypergraph) -> str:
    out = [f"k {h.k}"]
    out += [" ".join(h.edge_tokens(e)) for e in h.edges]
    return "\n".join(out) + "\n"
