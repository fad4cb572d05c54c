"""
Result of a maximal D-truss query.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CommunityResult:
    """Edges of a retrieved community plus query diagnostics."""

    edges: tuple[tuple[str, str], ...]
    vertices: tuple[str, ...]
    supernodes_visited: int
    edges_emitted: int
    coverage: dict[str, bool]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed * 1000.0

    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    def to_dict(self, emit_edges: bool = True) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "supernodes_visited": self.supernodes_visited,
            "edges_emitted": self.edges_emitted,
            "coverage": dict(self.coverage),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if emit_edges:
            payload["edges"] = [list(edge) for edge in self.edges]
            payload["vertices"] = list(self.vertices)
        return payload
