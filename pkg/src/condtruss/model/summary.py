"""
Data types of the summarized-graph index: supernodes, superedges, memberships.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..errors import LabelLookupError
from .trussness import TrussnessPair


@dataclass(frozen=True)
class Supernode:
    """A D-truss-connected class of edges sharing the skyline value `trussness`."""

    sid: int
    trussness: TrussnessPair
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError(f"Supernode {self.sid} has no members")


@dataclass(frozen=True)
class SummarizedGraph:
    """
    The summarized-graph index.

    Carries the source graph's label and edge tables so that queries can be
    answered and translated back to labels without the original graph.
    `superedges` holds (sid1, sid2) pairs with sid1 < sid2 in sorted order, and
    `vertex_membership[v]` the sorted sids of supernodes with an edge at v.
    """

    digest: bytes
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    supernodes: tuple[Supernode, ...]
    superedges: tuple[tuple[int, int], ...]
    vertex_membership: tuple[tuple[int, ...], ...]
    build_time: float | None = field(default=None, compare=False)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: vid for vid, label in enumerate(self.labels)}

    def vertex_id(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise LabelLookupError(label) from None

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighboring sids of every supernode."""
        nbrs: list[list[int]] = [[] for _ in self.supernodes]
        for a, b in self.superedges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(n)) for n in nbrs)

    def edge_label(self, eid: int) -> tuple[str, str]:
        u, v = self.edges[eid]
        return self.labels[u], self.labels[v]

    def level_histogram(self) -> Counter[TrussnessPair]:
        """Number of supernodes per trussness value."""
        return Counter(node.trussness for node in self.supernodes)


@dataclass(frozen=True)
class IndexStats:
    """Index size figures; `ecr` is superedges / source edges, exactly."""

    supernode_count: int
    superedge_count: int
    total_membership: int
    ecr: Fraction
    build_time: float | None = None

    def __post_init__(self) -> None:
        if self.ecr < 0:
            raise ValueError("ECR cannot be negative")
