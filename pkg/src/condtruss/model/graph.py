"""
Immutable simple directed graph with dense internal vertex ids.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from ..errors import LabelLookupError

IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True)
class VertexId:
    """A vertex: dense internal id plus the label it carried in the input."""

    id: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class DirectedEdge:
    """An edge src -> dst identified by a dense edge id."""

    src: int
    dst: int
    eid: int


@dataclass(frozen=True)
class GraphStats:
    """Size figures of a graph as reported by `convert` and `stats`."""

    vertices: int
    edges: int
    max_degree: int
    reciprocal_pairs: int


def _frozen(values: Sequence[int] | IntArray) -> IntArray:
    array = np.asarray(values, dtype=np.int64)
    array.setflags(write=False)
    return array


def _csr(keys: IntArray, nbrs: IntArray, vertex_count: int) -> tuple[IntArray, IntArray, IntArray]:
    """Group (key, nbr, eid) triples by key with neighbors sorted inside each row."""
    order = np.lexsort((nbrs, keys))
    counts = np.bincount(keys, minlength=vertex_count)
    indptr = np.zeros(vertex_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return _frozen(indptr), _frozen(nbrs[order]), _frozen(order)


class DiGraph:
    """
    A normalized directed graph: no self-loops, no parallel duplicates.

    Vertices are numbered 0..n-1 in first-appearance order and edges 0..m-1 in
    insertion order. Out- and in-adjacency are stored in CSR form with each row
    sorted by neighbor id. Instances never change after construction and can be
    shared between threads.
    """

    def __init__(self, labels: Sequence[str], edges: Sequence[tuple[int, int]]):
        self._labels: tuple[str, ...] = tuple(labels)
        self._index: dict[str, int] = {label: vid for vid, label in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise ValueError("Vertex labels must be unique")

        n = len(self._labels)
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        self._src = _frozen(pairs[:, 0])
        self._dst = _frozen(pairs[:, 1])

        if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
            raise ValueError("Edge endpoint outside the vertex range")
        if np.any(self._src == self._dst):
            raise ValueError("Self-loops are not allowed in a normalized graph")

        self.out_indptr, self.out_nbr, self.out_eid = _csr(self._src, self._dst, n)
        self.in_indptr, self.in_nbr, self.in_eid = _csr(self._dst, self._src, n)

        self._out: list[dict[int, int]] = [{} for _ in range(n)]
        self._in: list[dict[int, int]] = [{} for _ in range(n)]
        for eid, (u, v) in enumerate(zip(self._src.tolist(), self._dst.tolist(), strict=True)):
            if v in self._out[u]:
                raise ValueError(f"Duplicate edge {self._labels[u]} -> {self._labels[v]}")
            self._out[u][v] = eid
            self._in[v][u] = eid

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[tuple[str, str]]) -> DiGraph:
        """Build a graph from label pairs, dropping self-loops and repeated edges."""
        index: dict[str, int] = {}
        seen: set[tuple[int, int]] = set()
        edges: list[tuple[int, int]] = []
        for src_label, dst_label in pairs:
            u = index.setdefault(src_label, len(index))
            v = index.setdefault(dst_label, len(index))
            if u == v or (u, v) in seen:
                continue
            seen.add((u, v))
            edges.append((u, v))
        return cls(list(index), edges)

    # Size and identity

    @property
    def num_vertices(self) -> int:
        return len(self._labels)

    @property
    def num_edges(self) -> int:
        return int(self._src.shape[0])

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def src(self) -> IntArray:
        return self._src

    @property
    def dst(self) -> IntArray:
        return self._dst

    @cached_property
    def digest(self) -> bytes:
        """SHA-256 over the label table and the edge table."""
        h = hashlib.sha256()
        h.update(len(self._labels).to_bytes(8, "little"))
        for label in self._labels:
            encoded = label.encode("utf-8")
            h.update(len(encoded).to_bytes(8, "little"))
            h.update(encoded)
        h.update(self._src.astype("<u8").tobytes())
        h.update(self._dst.astype("<u8").tobytes())
        return h.digest()

    # Vertices

    def vertex(self, vid: int) -> VertexId:
        return VertexId(vid, self._labels[vid])

    @property
    def vertices(self) -> list[VertexId]:
        return [VertexId(vid, label) for vid, label in enumerate(self._labels)]

    def label(self, vid: int) -> str:
        return self._labels[vid]

    def id_of(self, label: str) -> int:
        """Internal id of a label; raises LabelLookupError for unknown labels."""
        try:
            return self._index[label]
        except KeyError:
            raise LabelLookupError(label) from None

    def has_label(self, label: str) -> bool:
        return label in self._index

    # Edges

    def edge(self, eid: int) -> DirectedEdge:
        return DirectedEdge(int(self._src[eid]), int(self._dst[eid]), eid)

    @property
    def edges(self) -> list[DirectedEdge]:
        return [
            DirectedEdge(u, v, eid)
            for eid, (u, v) in enumerate(zip(self._src.tolist(), self._dst.tolist(), strict=True))
        ]

    @cached_property
    def endpoints(self) -> tuple[tuple[int, int], ...]:
        """(src, dst) of every edge in eid order, as plain ints."""
        return tuple(zip(self._src.tolist(), self._dst.tolist(), strict=True))

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of the edge u -> v, or None if absent."""
        return self._out[u].get(v)

    def edge_label(self, eid: int) -> tuple[str, str]:
        u, v = self.endpoints[eid]
        return self._labels[u], self._labels[v]

    # Adjacency

    def out_neighbors(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, eid) pairs of edges leaving v, sorted by neighbor."""
        lo, hi = int(self.out_indptr[v]), int(self.out_indptr[v + 1])
        return list(zip(self.out_nbr[lo:hi].tolist(), self.out_eid[lo:hi].tolist(), strict=True))

    def in_neighbors(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, eid) pairs of edges entering v, sorted by neighbor."""
        lo, hi = int(self.in_indptr[v]), int(self.in_indptr[v + 1])
        return list(zip(self.in_nbr[lo:hi].tolist(), self.in_eid[lo:hi].tolist(), strict=True))

    def out_map(self, v: int) -> dict[int, int]:
        return self._out[v]

    def in_map(self, v: int) -> dict[int, int]:
        return self._in[v]

    def degree(self, v: int) -> int:
        return len(self._out[v]) + len(self._in[v])

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        """Union of in- and out-neighbors per vertex."""
        return tuple(
            frozenset(out.keys() | inn.keys()) for out, inn in zip(self._out, self._in, strict=True)
        )

    def incident_edges(self, v: int) -> Iterator[int]:
        yield from self._out[v].values()
        yield from self._in[v].values()

    # Derived graphs

    def reverse(self) -> DiGraph:
        """The same vertex set with every edge flipped; eid i stays eid i."""
        return DiGraph(self._labels, [(v, u) for u, v in self.endpoints])

    def edge_subgraph(self, eids: Iterable[int]) -> DiGraph:
        """Graph on the given edges only, with labels carried over."""
        return DiGraph.from_labeled_edges(self.edge_label(eid) for eid in sorted(eids))

    def stats(self) -> GraphStats:
        max_degree = max((self.degree(v) for v in range(self.num_vertices)), default=0)
        reciprocal = sum(1 for u, v in self.endpoints if u < v and u in self._out[v])
        return GraphStats(self.num_vertices, self.num_edges, max_degree, reciprocal)

    def __repr__(self) -> str:
        return f"DiGraph(vertices={self.num_vertices}, edges={self.num_edges})"
