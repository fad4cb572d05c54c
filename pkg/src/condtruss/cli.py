"""
Command roles: convert, decompose, index build, query, stats, bench.

Exit codes: 0 success, 1 oracle mismatch, 2 usage or parse error,
3 data-format error, 4 unknown vertex label.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from collections.abc import Iterator
from pathlib import Path
from typing import Any, TextIO

from .bench import BenchConfig, ExperimentKind, run_bench
from .codec import MAGIC, load_index, save_index
from .decomposition import (
    DecompositionResult,
    decompose,
    load_decomposition_file,
    write_decomposition,
)
from .errors import GraphMismatchError, UsageError
from .index import build_index, stats
from .loader import load_edge_list_file, write_edge_list
from .model import CommunityResult, DiGraph
from .model.trussness import level_order
from .query import direct_find, find_mdtruss
from .roles import RoleAppMain, RoleTask, RunConfig


@contextlib.contextmanager
def _output(path: Path | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with path.open("w", encoding="utf-8", newline="\n") as stream:
            yield stream


def _emit(config: RunConfig, payload: dict[str, Any], lines: list[str]) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _target(ns: argparse.Namespace, config: RunConfig) -> Path | None:
    positional: str | None = getattr(ns, "target", None)
    if positional and config.output and Path(positional) != config.output:
        raise UsageError("Give the output path either positionally or with --output, not both")
    return Path(positional) if positional else config.output


def _load_decomposition(graph: DiGraph, path: str | None, threads: int) -> DecompositionResult:
    if path is None:
        return decompose(graph, threads=threads)
    return load_decomposition_file(graph, path)


class ConvertTask(RoleTask):
    id = "convert"
    help = "normalize an edge list (drop self-loops and duplicates)"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("input")
        parser.add_argument("target", nargs="?", help="output edge list (default stdout)")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        graph = load_edge_list_file(ns.input)
        with _output(_target(ns, config)) as stream:
            write_edge_list(graph, stream)
        stats = graph.stats()
        self.logger.info(
            "Converted %s: %d vertices, %d edges, dmax %d",
            ns.input,
            stats.vertices,
            stats.edges,
            stats.max_degree,
        )
        return 0


class DecomposeTask(RoleTask):
    id = "decompose"
    help = "compute the skyline trussness of every edge"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph")
        parser.add_argument("target", nargs="?", help="decomposition file (default stdout)")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        graph = load_edge_list_file(ns.graph)
        result = decompose(graph, threads=config.threads)
        target = _target(ns, config)
        with _output(target) as stream:
            write_decomposition(graph, result, stream)

        payload = {"kc_max": result.kc_max, "kf_max": result.kf_max, "elapsed_s": result.elapsed}
        summary = f"kc_max={result.kc_max} kf_max={result.kf_max} elapsed={result.elapsed:.3f}s"
        if target is None:
            self.logger.info(summary)
        else:
            _emit(config, payload, [summary])
        return 0


class IndexBuildTask(RoleTask):
    id = "index-build"
    help = "decompose a graph and write its summarized-graph index"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph")
        parser.add_argument("target", nargs="?", help="index file")
        parser.add_argument("--decomposition", help="reuse a decomposition file")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        target = _target(ns, config)
        if target is None:
            raise UsageError("index build needs an output path")
        graph = load_edge_list_file(ns.graph)
        decomposition = _load_decomposition(graph, ns.decomposition, config.threads)
        index = build_index(graph, decomposition)
        size = save_index(index, target)
        figures = stats(index)
        build_time = figures.build_time or 0.0
        payload = {
            "supernodes": figures.supernode_count,
            "superedges": figures.superedge_count,
            "total_membership": figures.total_membership,
            "index_bytes": size,
            "build_time_s": build_time,
            "ecr": float(figures.ecr),
            "ecr_fraction": str(figures.ecr),
        }
        _emit(
            config,
            payload,
            [
                f"supernodes={figures.supernode_count} superedges={figures.superedge_count} "
                f"index_bytes={size} build_time={build_time:.3f}s "
                f"ecr={figures.ecr} ({float(figures.ecr):.6f})"
            ],
        )
        return 0


def _render_result(result: CommunityResult, emit_edges: bool) -> list[str]:
    lines = [
        f"edges={result.size} supernodes_visited={result.supernodes_visited} "
        f"edges_emitted={result.edges_emitted} elapsed_ms={result.elapsed_ms:.3f}"
    ]
    lines += [f"coverage {label} {str(hit).lower()}" for label, hit in result.coverage.items()]
    if emit_edges:
        lines += [f"{src} {dst}" for src, dst in result.edges]
    return lines


class QueryTask(RoleTask):
    id = "query"
    help = "find the maximal (kc,kf)-truss community of query vertices"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("index")
        parser.add_argument(
            "labels", nargs="+", help="query vertices; put labels starting with ':' after --"
        )
        parser.add_argument("--kc", type=int, default=0)
        parser.add_argument("--kf", type=int, default=0)
        parser.add_argument("--count-only", action="store_true", help="omit the edge list")
        parser.add_argument("--oracle", metavar="GRAPH", help="compare with the direct search")
        parser.add_argument("--decomposition", help="decomposition file for the oracle")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        index = load_index(ns.index)
        result = find_mdtruss(index, ns.labels, ns.kc, ns.kf)
        payload = result.to_dict(emit_edges=not ns.count_only)
        lines = _render_result(result, emit_edges=not ns.count_only)

        code = 0
        if ns.oracle:
            graph = load_edge_list_file(ns.oracle)
            if graph.digest != index.digest:
                raise GraphMismatchError(index.digest, graph.digest)
            # Without a decomposition file the baseline peels from scratch.
            decomposition = None
            if ns.decomposition:
                decomposition = _load_decomposition(graph, ns.decomposition, config.threads)
            expected = direct_find(graph, decomposition, ns.labels, ns.kc, ns.kf)
            verdict = "MATCH" if expected.edge_set() == result.edge_set() else "MISMATCH"
            payload["oracle"] = verdict
            lines.append(f"oracle {verdict}")
            if verdict == "MISMATCH":
                self.logger.error("Index and direct search disagree for %s", ns.labels)
                code = 1

        _emit(config, payload, lines)
        return code


class StatsTask(RoleTask):
    id = "stats"
    help = "report sizes of an index file or an edge list"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("path")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        path = Path(ns.path)
        with path.open("rb") as stream:
            is_index = stream.read(len(MAGIC)) == MAGIC
        if is_index:
            self._index_stats(path, config)
        else:
            self._graph_stats(path, config)
        return 0

    def _index_stats(self, path: Path, config: RunConfig) -> None:
        index = load_index(path)
        figures = stats(index)
        graph_bytes = sum(
            len(index.labels[u].encode()) + len(index.labels[v].encode()) + 2
            for u, v in index.edges
        )
        levels = sorted(index.level_histogram().items(), key=lambda item: level_order(item[0]))
        payload = {
            "vertices": index.num_vertices,
            "edges": index.num_edges,
            "supernodes": figures.supernode_count,
            "superedges": figures.superedge_count,
            "total_membership": figures.total_membership,
            "ecr": float(figures.ecr),
            "ecr_fraction": str(figures.ecr),
            "index_bytes": path.stat().st_size,
            "edge_list_bytes": graph_bytes,
            "levels": {str(level): count for level, count in levels},
        }
        lines = [
            f"vertices={index.num_vertices} edges={index.num_edges}",
            f"supernodes={figures.supernode_count} superedges={figures.superedge_count} "
            f"total_membership={figures.total_membership}",
            f"ecr={figures.ecr} ({float(figures.ecr):.6f})",
            f"index_bytes={payload['index_bytes']} edge_list_bytes={graph_bytes}",
        ]
        lines += [f"level {level} supernodes {count}" for level, count in levels]
        _emit(config, payload, lines)

    def _graph_stats(self, path: Path, config: RunConfig) -> None:
        figures = load_edge_list_file(path).stats()
        payload = {
            "vertices": figures.vertices,
            "edges": figures.edges,
            "dmax": figures.max_degree,
            "reciprocal_pairs": figures.reciprocal_pairs,
        }
        lines = [
            f"vertices={figures.vertices} edges={figures.edges} dmax={figures.max_degree} "
            f"reciprocal_pairs={figures.reciprocal_pairs}"
        ]
        _emit(config, payload, lines)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        message = f"expected comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(message) from None


class BenchTask(RoleTask):
    id = "bench"
    help = "time indexed queries against the direct search"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph")
        parser.add_argument("index")
        parser.add_argument(
            "--kind",
            choices=[kind.value for kind in ExperimentKind],
            default=ExperimentKind.DEGREE_BUCKET.value,
        )
        parser.add_argument("--queries", type=int, default=100, help="queries per configuration")
        parser.add_argument("--groups", type=int, default=5, help="degree groups")
        parser.add_argument("--kc", type=int, default=0)
        parser.add_argument("--kf", type=int, default=0)
        parser.add_argument("--qsize", type=int, default=None, help="|Q| (maximum for vary-qsize)")
        parser.add_argument("--sweep", type=_int_list, default=(0, 1, 2, 3))
        parser.add_argument("--no-direct", action="store_true", help="skip the direct baseline")
        parser.add_argument("--decomposition", help="decomposition file for the baseline")

    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        kind = ExperimentKind(ns.kind)
        qsize = ns.qsize
        if qsize is None:
            qsize = 5 if kind is ExperimentKind.VARY_QSIZE else 1
        bench_config = BenchConfig(
            kind=kind,
            queries=ns.queries,
            groups=ns.groups,
            kc=ns.kc,
            kf=ns.kf,
            qsize=qsize,
            sweep=ns.sweep,
            seed=config.seed,
            direct=not ns.no_direct,
        )
        graph = load_edge_list_file(ns.graph)
        index = load_index(ns.index)
        if index.digest != graph.digest:
            raise GraphMismatchError(index.digest, graph.digest)
        decomposition = None
        if bench_config.direct:
            decomposition = _load_decomposition(graph, ns.decomposition, config.threads)
        report = run_bench(graph, index, bench_config, decomposition)

        lines = [f"kind={kind.value} seed={config.seed} queries={bench_config.queries}"]
        for row in report.rows:
            fields = " ".join(f"{key}={value}" for key, value in row.to_dict().items())
            lines.append(fields)
        with _output(config.output) as stream:
            if config.format == "json":
                stream.write(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
            else:
                stream.write("\n".join(lines) + "\n")
        mismatched = sum(row.emission_mismatches for row in report.rows)
        if mismatched:
            self.logger.error("%d queries emitted a wrong number of edges", mismatched)
            return 1
        return 0


ROLES: tuple[type[RoleTask], ...] = (
    ConvertTask,
    DecomposeTask,
    IndexBuildTask,
    QueryTask,
    StatsTask,
    BenchTask,
)


def build_app() -> RoleAppMain:
    app = RoleAppMain()
    for role in ROLES:
        app.add_role(role)
    return app


def main(argv: list[str] | None = None) -> None:
    sys.exit(build_app().main(argv))
