"""
Query benchmark: indexed search against the direct baseline.

Four experiment kinds: query vertices bucketed by degree, sweeps over kc or
kf at fixed query samples, and sweeps over the query-set size.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .decomposition import DecompositionResult, decompose
from .errors import GraphMismatchError, UsageError
from .model import CommunityResult, DiGraph, SummarizedGraph
from .query import direct_find, find_mdtruss

logger = logging.getLogger(__name__)


class ExperimentKind(Enum):
    DEGREE_BUCKET = "degree-bucket"
    VARY_KC = "vary-kc"
    VARY_KF = "vary-kf"
    VARY_QSIZE = "vary-qsize"


@dataclass(frozen=True)
class BenchConfig:
    kind: ExperimentKind = ExperimentKind.DEGREE_BUCKET
    queries: int = 100
    groups: int = 5
    kc: int = 0
    kf: int = 0
    qsize: int = 1
    sweep: tuple[int, ...] = (0, 1, 2, 3)
    seed: int = 0
    direct: bool = True

    def __post_init__(self) -> None:
        if self.queries < 1 or self.groups < 1 or self.qsize < 1:
            raise UsageError("queries, groups and qsize must be positive")
        if any(value < 0 for value in self.sweep) or self.kc < 0 or self.kf < 0:
            raise UsageError("kc, kf and sweep values must be non-negative")


@dataclass(frozen=True)
class BenchRow:
    """Means over `queries` queries of one configuration."""

    params: dict[str, int]
    queries: int
    mean_index_ms: float
    mean_size: float
    mean_direct_ms: float | None = None
    emission_mismatches: int = 0

    @property
    def speedup(self) -> float | None:
        if self.mean_direct_ms is None or self.mean_index_ms <= 0:
            return None
        return self.mean_direct_ms / self.mean_index_ms

    def to_dict(self) -> dict[str, Any]:
        direct = self.mean_direct_ms
        return {
            **self.params,
            "queries": self.queries,
            "mean_index_ms": round(self.mean_index_ms, 4),
            "mean_direct_ms": None if direct is None else round(direct, 4),
            "speedup": None if self.speedup is None else round(self.speedup, 2),
            "mean_size": self.mean_size,
            "emission_mismatches": self.emission_mismatches,
        }


@dataclass(frozen=True)
class BenchReport:
    kind: ExperimentKind
    seed: int
    rows: list[BenchRow] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "seed": self.seed,
            "rows": [row.to_dict() for row in self.rows],
        }


def degree_groups(graph: DiGraph, groups: int) -> list[list[int]]:
    """Vertices by degree descending (ties by id), split into `groups` near-equal parts."""
    order = sorted(range(graph.num_vertices), key=lambda v: (-graph.degree(v), v))
    return [part.tolist() for part in np.array_split(np.asarray(order, dtype=np.int64), groups)]


def emission_mismatch(result: CommunityResult, reference: CommunityResult | None) -> str | None:
    """
    Describe how an indexed result breaks the emission check, or None.

    Every result edge must be emitted exactly once. When the direct baseline
    ran, the index must return exactly its community.
    """
    if result.edges_emitted != result.size:
        return f"emitted {result.edges_emitted} edges for {result.size} results"
    if reference is not None and result.edge_set() != reference.edge_set():
        return f"emitted {result.edges_emitted} edges, direct search found {reference.size}"
    return None


class _Runner:
    def __init__(
        self,
        graph: DiGraph,
        index: SummarizedGraph,
        decomposition: DecompositionResult | None,
        config: BenchConfig,
    ):
        self.graph = graph
        self.index = index
        self.decomposition = decomposition
        self.config = config

    def _timed(self, call: Callable[[], CommunityResult]) -> tuple[float, CommunityResult]:
        started = time.perf_counter()
        result = call()
        return (time.perf_counter() - started) * 1000.0, result

    def row(
        self, params: dict[str, int], samples: Sequence[list[str]], kc: int, kf: int
    ) -> BenchRow:
        # Warm-up, discarded.
        find_mdtruss(self.index, samples[0], kc, kf)

        index_ms: list[float] = []
        direct_ms: list[float] = []
        sizes: list[int] = []
        mismatches = 0
        for query in samples:
            elapsed, result = self._timed(lambda q=query: find_mdtruss(self.index, q, kc, kf))
            index_ms.append(elapsed)
            sizes.append(result.size)
            reference: CommunityResult | None = None
            if self.config.direct:
                elapsed, reference = self._timed(
                    lambda q=query: direct_find(self.graph, self.decomposition, q, kc, kf)
                )
                direct_ms.append(elapsed)
            problem = emission_mismatch(result, reference)
            if problem is not None:
                mismatches += 1
                logger.error("Query %s at (%d,%d): %s", query, kc, kf, problem)

        return BenchRow(
            params=params,
            queries=len(samples),
            mean_index_ms=float(np.mean(index_ms)),
            mean_size=float(np.mean(sizes)),
            mean_direct_ms=float(np.mean(direct_ms)) if direct_ms else None,
            emission_mismatches=mismatches,
        )


def _sample_queries(
    rng: np.random.Generator, pool: Sequence[int], labels: Sequence[str], count: int, size: int
) -> list[list[str]]:
    size = min(size, len(pool))
    return [
        [labels[pool[i]] for i in rng.choice(len(pool), size=size, replace=False).tolist()]
        for _ in range(count)
    ]


def run_bench(
    graph: DiGraph,
    index: SummarizedGraph,
    config: BenchConfig,
    decomposition: DecompositionResult | None = None,
) -> BenchReport:
    """Run one experiment; every row aggregates exactly `config.queries` queries."""
    if index.digest != graph.digest:
        raise GraphMismatchError(index.digest, graph.digest)
    if graph.num_vertices == 0:
        raise UsageError("Cannot benchmark queries on an empty graph")
    if config.direct and decomposition is None:
        decomposition = decompose(graph)

    rng = np.random.default_rng(config.seed)
    runner = _Runner(graph, index, decomposition, config)
    labels = graph.labels
    everyone = list(range(graph.num_vertices))
    report = BenchReport(config.kind, config.seed)

    match config.kind:
        case ExperimentKind.DEGREE_BUCKET:
            for group, members in enumerate(degree_groups(graph, config.groups)):
                if not members:
                    continue
                samples = _sample_queries(rng, members, labels, config.queries, config.qsize)
                params = {"group": group, "kc": config.kc, "kf": config.kf}
                report.rows.append(runner.row(params, samples, config.kc, config.kf))
        case ExperimentKind.VARY_KC | ExperimentKind.VARY_KF:
            samples = _sample_queries(rng, everyone, labels, config.queries, config.qsize)
            for value in config.sweep:
                if config.kind is ExperimentKind.VARY_KC:
                    kc, kf = value, config.kf
                else:
                    kc, kf = config.kc, value
                report.rows.append(runner.row({"kc": kc, "kf": kf}, samples, kc, kf))
        case ExperimentKind.VARY_QSIZE:
            for size in range(1, config.qsize + 1):
                samples = _sample_queries(rng, everyone, labels, config.queries, size)
                params = {"qsize": size, "kc": config.kc, "kf": config.kf}
                report.rows.append(runner.row(params, samples, config.kc, config.kf))

    logger.info("Bench %s finished with %d rows", config.kind.value, len(report.rows))
    return report
