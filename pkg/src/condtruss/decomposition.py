"""
D-truss decomposition: maximal (kc, kf)-trusses by peeling and per-edge
skyline trussness.
"""

from __future__ import annotations

import heapq
import logging
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

import numpy as np

from .errors import GraphMismatchError, IndexFormatError, LabelLookupError
from .model import DiGraph, SkylineSet, SupportTable, TrussnessPair, skyline_of
from .model.trussness import level_order
from .triangles import compute_supports, peel_edge

logger = logging.getLogger(__name__)

_HEADER = "# condtruss decomposition"


@dataclass(frozen=True)
class DecompositionResult:
    """Skyline trussness of every edge, by eid."""

    skyline: tuple[SkylineSet, ...]
    kc_max: int
    kf_max: int
    digest: bytes
    elapsed: float = field(default=0.0, compare=False)

    def covered(self, pair: TrussnessPair) -> frozenset[int]:
        """Edges of the maximal (kc, kf)-truss, read off the skylines."""
        return frozenset(eid for eid, sky in enumerate(self.skyline) if sky.covers(pair))

    def members(self, pair: TrussnessPair) -> list[int]:
        """Edges whose skyline contains `pair` exactly, ascending."""
        return [eid for eid, sky in enumerate(self.skyline) if pair in sky]

    def level_values(self) -> list[TrussnessPair]:
        """Distinct skyline values, largest (kc, kf) first."""
        return sorted({pair for sky in self.skyline for pair in sky}, key=level_order)

    def total_membership(self) -> int:
        return sum(len(sky) for sky in self.skyline)


def _peel_to(graph: DiGraph, table: SupportTable, kc: int, kf: int) -> list[int]:
    """
    Peel every edge with csup < kc or fsup < kf until none is left.

    Pending edges leave the queue in ascending eid order. Returns the removed
    eids in removal order.
    """
    violating = table.alive & ((table.csup < kc) | (table.fsup < kf))
    heap = np.flatnonzero(violating).tolist()
    heapq.heapify(heap)
    queued = violating.copy()
    removed: list[int] = []
    while heap:
        eid = heapq.heappop(heap)
        for f in peel_edge(graph, table, eid):
            if not queued[f] and (table.csup[f] < kc or table.fsup[f] < kf):
                queued[f] = True
                heapq.heappush(heap, f)
        removed.append(eid)
    return removed


def max_dtruss(
    graph: DiGraph, kc: int, kf: int, supports: SupportTable | None = None
) -> frozenset[int]:
    """
    The maximal edge set in which every edge has csup >= kc and fsup >= kf.

    `supports`, when given, is the starting table and is left untouched.
    """
    if kc < 0 or kf < 0:
        raise ValueError("kc and kf must be non-negative")
    table = supports.copy() if supports is not None else compute_supports(graph)
    _peel_to(graph, table, kc, kf)
    return table.alive_edges()


def kf_profile(graph: DiGraph, kc: int, base: SupportTable | None = None) -> dict[int, int]:
    """
    Largest kf for which each edge of the maximal (kc, 0)-truss survives.

    Works level by level: at level k every edge with fsup < k + 1, and every
    edge whose csup drops below kc as a consequence, is removed with value k.
    `base` is an optional support table to start from; it is not modified.
    """
    table = base.copy() if base is not None else compute_supports(graph)
    _peel_to(graph, table, kc, 0)
    profile: dict[int, int] = {}
    level = 0
    while table.alive.any():
        for eid in _peel_to(graph, table, kc, level + 1):
            profile[eid] = level
        level += 1
    return profile


def _profile_level(job: tuple[DiGraph, int, SupportTable]) -> tuple[int, dict[int, int]]:
    graph, kc, base = job
    return kc, kf_profile(graph, kc, base)


def decompose(graph: DiGraph, threads: int = 1) -> DecompositionResult:
    """
    Skyline trussness of every edge.

    kc runs upward from 0 while the (kc, 0)-truss is non-empty; each level
    contributes the candidate (kc, kf_profile) and the skyline of the
    candidates is kept. With threads > 1 the per-level profiles are computed
    in a process pool.
    """
    started = time.perf_counter()
    base = compute_supports(graph)
    candidates: list[list[TrussnessPair]] = [[] for _ in range(graph.num_edges)]

    def collect(kc: int, profile: dict[int, int]) -> None:
        for eid, kf in profile.items():
            candidates[eid].append(TrussnessPair(kc, kf))
        top = max(profile.values(), default=0)
        logger.debug("kc=%d: %d edges, kf up to %d", kc, len(profile), top)

    jobs: list[tuple[DiGraph, int, SupportTable]] = []
    kc = 0
    while True:
        _peel_to(graph, base, kc, 0)
        if not base.alive.any():
            break
        if threads > 1:
            jobs.append((graph, kc, base.copy()))
        else:
            collect(kc, kf_profile(graph, kc, base))
        kc += 1

    if jobs:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for level, profile in pool.map(_profile_level, jobs):
                collect(level, profile)

    skyline = tuple(skyline_of(pairs) for pairs in candidates)
    kc_max = max((sky.max_kc for sky in skyline if sky), default=0)
    kf_max = max((sky.max_kf for sky in skyline if sky), default=0)
    elapsed = time.perf_counter() - started
    logger.info("Decomposed %r in %.3fs: kc_max=%d kf_max=%d", graph, elapsed, kc_max, kf_max)
    return DecompositionResult(skyline, kc_max, kf_max, graph.digest, elapsed)


def write_decomposition(graph: DiGraph, result: DecompositionResult, stream: TextIO) -> None:
    """One `src dst k:(kc,kf)...` line per edge in eid order after '#' header lines."""
    stream.write(f"{_HEADER}\n")
    stream.write(f"# kc_max {result.kc_max} kf_max {result.kf_max}\n")
    stream.write(f"# digest {result.digest.hex()}\n")
    for eid, sky in enumerate(result.skyline):
        src, dst = graph.edge_label(eid)
        stream.write(f"{src} {dst} k:{sky}\n")


def read_decomposition(
    graph: DiGraph, lines: Iterable[str], source: str | None = None
) -> DecompositionResult:
    """Parse a decomposition file written for `graph`."""
    skyline: list[SkylineSet | None] = [None] * graph.num_edges
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            parts = stripped[1:].split()
            if parts[:1] == ["digest"] and len(parts) == 2:
                try:
                    digest = bytes.fromhex(parts[1])
                except ValueError:
                    raise IndexFormatError(line_number, "bad digest", "line") from None
                if digest != graph.digest:
                    raise GraphMismatchError(digest, graph.digest, "decomposition")
            continue
        tokens = stripped.split()
        if len(tokens) != 3 or not tokens[2].startswith("k:"):
            where = source or "input"
            raise IndexFormatError(line_number, f"expected 'src dst k:...' in {where}", "line")
        try:
            eid = graph.edge_id(graph.id_of(tokens[0]), graph.id_of(tokens[1]))
            sky = SkylineSet.parse(tokens[2][2:])
        except (LabelLookupError, ValueError) as e:
            raise IndexFormatError(line_number, str(e), "line") from None
        if eid is None:
            raise IndexFormatError(line_number, f"no edge {tokens[0]} -> {tokens[1]}", "line")
        if skyline[eid] is not None:
            raise IndexFormatError(line_number, f"edge {tokens[0]} -> {tokens[1]} repeated", "line")
        skyline[eid] = sky

    missing = [eid for eid, sky in enumerate(skyline) if sky is None]
    if missing:
        src, dst = graph.edge_label(missing[0])
        raise IndexFormatError(0, f"{len(missing)} edges missing, first {src} -> {dst}", "line")

    complete = tuple(sky for sky in skyline if sky is not None)
    kc_max = max((sky.max_kc for sky in complete if sky), default=0)
    kf_max = max((sky.max_kf for sky in complete if sky), default=0)
    return DecompositionResult(complete, kc_max, kf_max, graph.digest)


def _utf8_lines(raw: Iterable[bytes]) -> Iterator[str]:
    for line_number, line in enumerate(raw, start=1):
        try:
            yield line.decode("utf-8")
        except UnicodeDecodeError:
            raise IndexFormatError(line_number, "line is not UTF-8", "line") from None


def load_decomposition_file(graph: DiGraph, path: str | Path) -> DecompositionResult:
    path = Path(path)
    with path.open("rb") as stream:
        return read_decomposition(graph, _utf8_lines(stream), str(path))
