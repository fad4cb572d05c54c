"""
Maximal D-truss queries, on the summarized graph and directly on the graph.
"""

from __future__ import annotations

import time
from collections import deque
from collections.abc import Iterable, Sequence

import networkx as nx

from .decomposition import DecompositionResult, max_dtruss
from .errors import GraphMismatchError, UsageError
from .model import CommunityResult, DiGraph, SummarizedGraph, TrussnessPair


def _checked_target(query: Sequence[str], kc: int, kf: int) -> TrussnessPair:
    if not query:
        raise UsageError("The query vertex set must not be empty")
    if kc < 0 or kf < 0:
        raise UsageError(f"kc and kf must be non-negative, got ({kc},{kf})")
    return TrussnessPair(kc, kf)


def _labelled(
    eids: Iterable[int], edges: Sequence[tuple[int, int]], labels: Sequence[str]
) -> tuple[tuple[tuple[str, str], ...], tuple[str, ...]]:
    pairs = sorted({(labels[edges[eid][0]], labels[edges[eid][1]]) for eid in eids})
    vertices = sorted({label for pair in pairs for label in pair})
    return tuple(pairs), tuple(vertices)


def find_mdtruss(
    index: SummarizedGraph, query: Sequence[str], kc: int, kf: int
) -> CommunityResult:
    """
    Breadth-first search over supernodes whose trussness covers (kc, kf),
    seeded with the qualified supernodes of every query vertex.
    """
    target = _checked_target(query, kc, kf)
    vids = [index.vertex_id(label) for label in query]

    started = time.perf_counter()
    supernodes = index.supernodes
    visited = bytearray(len(supernodes))
    pending: deque[int] = deque()
    coverage: dict[str, bool] = {}
    for label, vid in zip(query, vids, strict=True):
        seeds = [
            sid for sid in index.vertex_membership[vid] if supernodes[sid].trussness.covers(target)
        ]
        coverage[label] = bool(seeds)
        for sid in seeds:
            if not visited[sid]:
                visited[sid] = 1
                pending.append(sid)

    emitted: set[int] = set()
    output: list[int] = []
    supernodes_visited = 0
    adjacency = index.adjacency
    while pending:
        sid = pending.popleft()
        supernodes_visited += 1
        for eid in supernodes[sid].members:
            if eid not in emitted:
                emitted.add(eid)
                output.append(eid)
        for nxt in adjacency[sid]:
            if not visited[nxt] and supernodes[nxt].trussness.covers(target):
                visited[nxt] = 1
                pending.append(nxt)
    elapsed = time.perf_counter() - started

    edges, vertices = _labelled(output, index.edges, index.labels)
    return CommunityResult(edges, vertices, supernodes_visited, len(output), coverage, elapsed)


def direct_find(
    graph: DiGraph,
    decomposition: DecompositionResult | None,
    query: Sequence[str],
    kc: int,
    kf: int,
) -> CommunityResult:
    """
    Baseline without the index: the maximal (kc, kf)-truss, split into weakly
    connected components, keeping those that touch a query vertex.

    With a decomposition the truss is read off the skylines, otherwise it is
    peeled from scratch.
    """
    target = _checked_target(query, kc, kf)
    vids = [graph.id_of(label) for label in query]
    if decomposition is not None and decomposition.digest != graph.digest:
        raise GraphMismatchError(decomposition.digest, graph.digest, "decomposition")

    started = time.perf_counter()
    if decomposition is not None:
        truss = decomposition.covered(target)
    else:
        truss = max_dtruss(graph, kc, kf)
    endpoints = graph.endpoints
    undirected: nx.Graph[int] = nx.Graph()
    undirected.add_edges_from(endpoints[eid] for eid in truss)

    coverage: dict[str, bool] = {}
    reached: set[int] = set()
    for label, vid in zip(query, vids, strict=True):
        coverage[label] = undirected.has_node(vid)
        if coverage[label] and vid not in reached:
            reached |= nx.node_connected_component(undirected, vid)
    kept = [eid for eid in truss if endpoints[eid][0] in reached]
    elapsed = time.perf_counter() - started

    edges, vertices = _labelled(kept, endpoints, graph.labels)
    return CommunityResult(edges, vertices, 0, len(edges), coverage, elapsed)
