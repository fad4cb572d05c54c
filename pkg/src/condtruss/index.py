"""
Construction of the summarized-graph index.

Supernodes are the D-truss-connected classes of every skyline value d: edges
whose skyline contains d, grouped by connectivity through edges whose
skyline covers d. Two supernodes are linked whenever some member edges of
each are identical or share a vertex.
"""

from __future__ import annotations

import logging
import time
from collections import deque
from fractions import Fraction
from itertools import combinations

from .decomposition import DecompositionResult
from .errors import GraphMismatchError
from .model import DiGraph, IndexStats, SummarizedGraph, Supernode, TrussnessPair

logger = logging.getLogger(__name__)


def connected_classes(
    graph: DiGraph, decomposition: DecompositionResult, d: TrussnessPair
) -> list[list[int]]:
    """
    Partition the edges whose skyline contains `d` into connected classes.

    Breadth-first over edges, starting at each unvisited member and expanding
    through incident edges whose skyline covers `d`. Classes come out ordered
    by their smallest eid, members ascending.
    """
    skyline = decomposition.skyline
    endpoints = graph.endpoints
    visited: set[int] = set()
    classes: list[list[int]] = []

    for start in decomposition.members(d):
        if start in visited:
            continue
        visited.add(start)
        members: list[int] = []
        queue: deque[int] = deque([start])
        while queue:
            eid = queue.popleft()
            if d in skyline[eid]:
                members.append(eid)
            for end in endpoints[eid]:
                for nxt in graph.incident_edges(end):
                    if nxt not in visited and skyline[nxt].covers(d):
                        visited.add(nxt)
                        queue.append(nxt)
        classes.append(sorted(members))
    return classes


def build_index(graph: DiGraph, decomposition: DecompositionResult) -> SummarizedGraph:
    """
    Build the summarized graph.

    Supernode ids follow the skyline values from the largest (kc, kf) down,
    then the smallest member eid of each class.
    """
    if decomposition.digest != graph.digest:
        raise GraphMismatchError(decomposition.digest, graph.digest, "decomposition")

    started = time.perf_counter()
    supernodes: list[Supernode] = []
    for d in decomposition.level_values():
        for members in connected_classes(graph, decomposition, d):
            supernodes.append(Supernode(len(supernodes), d, tuple(members)))

    touching: list[set[int]] = [set() for _ in range(graph.num_vertices)]
    for node in supernodes:
        for eid in node.members:
            u, v = graph.endpoints[eid]
            touching[u].add(node.sid)
            touching[v].add(node.sid)
    membership = tuple(tuple(sorted(sids)) for sids in touching)

    # Members sharing a vertex or an edge always meet in some vertex's membership.
    links: set[tuple[int, int]] = set()
    for sids in membership:
        links.update(combinations(sids, 2))

    elapsed = time.perf_counter() - started + decomposition.elapsed
    index = SummarizedGraph(
        digest=graph.digest,
        labels=graph.labels,
        edges=graph.endpoints,
        supernodes=tuple(supernodes),
        superedges=tuple(sorted(links)),
        vertex_membership=membership,
        build_time=elapsed,
    )
    logger.info(
        "Built index for %r: %d supernodes, %d superedges in %.3fs",
        graph,
        len(index.supernodes),
        len(index.superedges),
        elapsed,
    )
    return index


def stats(index: SummarizedGraph) -> IndexStats:
    edge_count = index.num_edges
    ecr = Fraction(len(index.superedges), edge_count) if edge_count else Fraction(0)
    return IndexStats(
        supernode_count=len(index.supernodes),
        superedge_count=len(index.superedges),
        total_membership=sum(len(node.members) for node in index.supernodes),
        ecr=ecr,
        build_time=index.build_time,
    )
