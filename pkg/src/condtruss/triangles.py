"""
Directed triangle roles and cycle/flow support counting.

For an edge e = u -> v and a witness w, the triangle {u, v, w} is a cycle
triangle for e when v -> w and w -> u both exist, and a flow triangle when
any of {u -> w, w -> v}, {w -> u, w -> v}, {u -> w, v -> w} exists. With
reciprocal edges a witness can play both roles; supports count distinct
witnesses per role.
"""

from __future__ import annotations

from enum import Flag

import numpy as np
import numpy.typing as npt

from .errors import DeadEdgeError
from .model import DiGraph, SupportTable


class TriangleRole(Flag):
    NONE = 0
    CYCLE = 1
    FLOW = 2


def classify(uw: bool, wu: bool, vw: bool, wv: bool) -> TriangleRole:
    """Role of witness w for edge u -> v given which of the four u-w / v-w edges exist."""
    role = TriangleRole.NONE
    if vw and wu:
        role |= TriangleRole.CYCLE
    if (uw and wv) or (wu and wv) or (uw and vw):
        role |= TriangleRole.FLOW
    return role


def _present(graph: DiGraph, a: int, b: int, alive: npt.NDArray[np.bool_] | None) -> bool:
    eid = graph.out_map(a).get(b)
    return eid is not None and (alive is None or bool(alive[eid]))


def _role(
    graph: DiGraph, u: int, v: int, w: int, alive: npt.NDArray[np.bool_] | None
) -> TriangleRole:
    return classify(
        _present(graph, u, w, alive),
        _present(graph, w, u, alive),
        _present(graph, v, w, alive),
        _present(graph, w, v, alive),
    )


def triangle_role(
    graph: DiGraph, eid: int, w: int, table: SupportTable | None = None
) -> TriangleRole:
    """
    Role of witness `w` for edge `eid`, looking only at alive edges when a
    table is given.
    """
    u, v = graph.endpoints[eid]
    if w in (u, v):
        raise ValueError("Witness must differ from both endpoints")
    return _role(graph, u, v, w, None if table is None else table.alive)


def compute_supports(graph: DiGraph, alive: npt.NDArray[np.bool_] | None = None) -> SupportTable:
    """
    Count cycle and flow witnesses of every edge from scratch.

    With `alive` given, only those edges exist; the others are marked dead
    with zero counters.
    """
    table = SupportTable.zeros(graph.num_edges)
    if alive is not None:
        table.alive[:] = alive
    nbrs = graph.neighbor_sets
    for eid, (u, v) in enumerate(graph.endpoints):
        if alive is not None and not alive[eid]:
            continue
        csup = fsup = 0
        for w in nbrs[u] & nbrs[v]:
            role = _role(graph, u, v, w, alive)
            if TriangleRole.CYCLE in role:
                csup += 1
            if TriangleRole.FLOW in role:
                fsup += 1
        table.csup[eid] = csup
        table.fsup[eid] = fsup
    return table


def _edges_between(graph: DiGraph, a: int, b: int, alive: npt.NDArray[np.bool_]) -> list[int]:
    found = []
    for x, y in ((a, b), (b, a)):
        eid = graph.out_map(x).get(y)
        if eid is not None and alive[eid]:
            found.append(eid)
    return found


def peel_edge(graph: DiGraph, table: SupportTable, eid: int) -> set[int]:
    """
    Remove `eid` and update the counters of edges that shared a triangle with it.

    Returns the eids whose csup or fsup changed.
    """
    if not table.alive[eid]:
        raise DeadEdgeError(eid)

    u, v = graph.endpoints[eid]
    alive = table.alive
    nbrs = graph.neighbor_sets

    # (edge, its endpoints, the witness it loses or keeps)
    touched: list[tuple[int, int, int, int]] = []
    for w in nbrs[u] & nbrs[v]:
        for end, other in ((u, v), (v, u)):
            for f in _edges_between(graph, end, w, alive):
                p, q = graph.endpoints[f]
                touched.append((f, p, q, other))

    before = [_role(graph, p, q, x, alive) for _, p, q, x in touched]
    alive[eid] = False
    changed: set[int] = set()
    for (f, p, q, x), was in zip(touched, before, strict=True):
        now = _role(graph, p, q, x, alive)
        if TriangleRole.CYCLE in was and TriangleRole.CYCLE not in now:
            table.csup[f] -= 1
            changed.add(f)
        if TriangleRole.FLOW in was and TriangleRole.FLOW not in now:
            table.fsup[f] -= 1
            changed.add(f)
    return changed
