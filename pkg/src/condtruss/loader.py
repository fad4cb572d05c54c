"""
Edge-list ingestion and normalized output.

Input lines hold two whitespace-separated labels; lines starting with '#' or
'%' are comments and blank lines are ignored.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import TextIO

from .errors import EdgeListParseError
from .model import DiGraph

_COMMENT_PREFIXES = ("#", "%")

logger = logging.getLogger(__name__)


def _label_pairs(lines: Iterable[str], source: str | None) -> Iterator[tuple[str, str]]:
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(_COMMENT_PREFIXES):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_number, line, source)
        yield tokens[0], tokens[1]


def load_edge_list(stream: Iterable[str], source: str | None = None) -> DiGraph:
    """Parse an edge list into a normalized DiGraph."""
    graph = DiGraph.from_labeled_edges(_label_pairs(stream, source))
    logger.debug("Loaded %r from %s", graph, source or "<stream>")
    return graph


def _utf8_lines(raw: Iterable[bytes], source: str) -> Iterator[str]:
    for line_number, line in enumerate(raw, start=1):
        try:
            yield line.decode("utf-8")
        except UnicodeDecodeError as e:
            text = line.decode("utf-8", errors="replace")
            reason = f"not UTF-8 (byte {e.start} of the line)"
            raise EdgeListParseError(line_number, text, source, reason) from None


def load_edge_list_file(path: str | Path) -> DiGraph:
    path = Path(path)
    with path.open("rb") as stream:
        return load_edge_list(_utf8_lines(stream, str(path)), str(path))


def edge_list_header(graph: DiGraph) -> str:
    stats = graph.stats()
    return f"# vertices {stats.vertices} edges {stats.edges} dmax {stats.max_degree}"


def write_edge_list(graph: DiGraph, stream: TextIO) -> None:
    """Write the header line then one `src dst` line per edge in eid order."""
    stream.write(edge_list_header(graph) + "\n")
    for eid in range(graph.num_edges):
        src, dst = graph.edge_label(eid)
        stream.write(f"{src} {dst}\n")
