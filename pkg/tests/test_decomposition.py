#!/usr/bin/env python3
"""
Unit and property tests for maximal D-trusses and the skyline decomposition.
"""

import io
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pytest

from condtruss import (
    GraphMismatchError,
    IndexFormatError,
    TrussnessPair,
    compute_supports,
    decompose,
    dominates,
    kf_profile,
    load_decomposition_file,
    max_dtruss,
    peel_edge,
    read_decomposition,
    write_decomposition,
)
from tests.graphs import (
    eid,
    g_cyc,
    g_flow,
    g_mix,
    g_rec3,
    graph_of,
    labelled,
    naive_supports,
    naive_truss,
    random_corpus,
)


def peel_in_order(graph, kc, kf, rng):
    """Peel violating edges in a random order until none is left."""
    table = compute_supports(graph)
    while True:
        violating = [
            e
            for e in np.flatnonzero(table.alive).tolist()
            if table.csup[e] < kc or table.fsup[e] < kf
        ]
        if not violating:
            return table.alive_edges()
        peel_edge(graph, table, int(rng.choice(violating)))


class TestMaxDTruss(unittest.TestCase):
    """Peeling to a (kc, kf) fixpoint."""

    def test_cycle_graph(self):
        """The cycle survives kc=1 and vanishes at kc=2."""
        graph = g_cyc()
        self.assertEqual(max_dtruss(graph, 1, 0), frozenset(range(3)))
        self.assertEqual(max_dtruss(graph, 2, 0), frozenset())

    def test_reciprocal_triangle(self):
        """Every edge of the reciprocal triangle reaches (1,1)."""
        self.assertEqual(max_dtruss(g_rec3(), 1, 1), frozenset(range(6)))

    def test_zero_thresholds_keep_everything(self):
        """(0,0) keeps triangle-free edges."""
        graph = graph_of("a b\nb c\nc d\n")
        self.assertEqual(max_dtruss(graph, 0, 0), frozenset(range(3)))

    def test_mix_splits_by_role(self):
        """Cycle and flow thresholds pick apart the two triangles."""
        graph = g_mix()
        cycle = labelled(graph, max_dtruss(graph, 1, 0))
        flow = labelled(graph, max_dtruss(graph, 0, 1))
        self.assertEqual(cycle, {("a", "b"), ("b", "c"), ("c", "a")})
        self.assertEqual(flow, {("c", "d"), ("c", "e"), ("e", "d")})
        self.assertEqual(max_dtruss(graph, 1, 1), frozenset())

    def test_given_supports_left_untouched(self):
        """A caller's support table is copied, not peeled."""
        graph = g_cyc()
        table = compute_supports(graph)
        max_dtruss(graph, 2, 0, table)
        self.assertEqual(table.alive_count(), 3)

    def test_negative_threshold_rejected(self):
        """Negative thresholds are refused."""
        with self.assertRaises(ValueError):
            max_dtruss(g_cyc(), -1, 0)

    def test_result_is_a_truss(self):
        """Every remaining edge meets the thresholds inside the result."""
        for graph in random_corpus(30, seed=21):
            truss = max_dtruss(graph, 1, 1)
            for c, f in naive_supports(graph, truss).values():
                self.assertGreaterEqual(c, 1)
                self.assertGreaterEqual(f, 1)

    def test_peeling_order_does_not_matter(self):
        """Random peel orders reach the same fixpoint."""
        rng = np.random.default_rng(3)
        for graph in random_corpus(30, seed=22):
            for kc, kf in ((1, 0), (0, 2), (1, 1), (2, 1)):
                self.assertEqual(peel_in_order(graph, kc, kf, rng), max_dtruss(graph, kc, kf))

    def test_containment_monotonicity(self):
        """Raising either threshold gives a subset."""
        for graph in random_corpus(30, seed=23):
            for kc in range(3):
                for kf in range(3):
                    base = max_dtruss(graph, kc, kf)
                    self.assertLessEqual(max_dtruss(graph, kc + 1, kf), base)
                    self.assertLessEqual(max_dtruss(graph, kc, kf + 1), base)

    def test_union_of_trusses_is_a_truss(self):
        """Two (kc, kf)-trusses found in different halves still satisfy the bounds together."""
        for graph in random_corpus(30, seed=24):
            half = graph.num_edges // 2
            left = graph.edge_subgraph(range(half))
            right = graph.edge_subgraph(range(half, graph.num_edges))
            for kc, kf in ((1, 0), (0, 1), (1, 1)):
                union = {left.edge_label(e) for e in max_dtruss(left, kc, kf)}
                union |= {right.edge_label(e) for e in max_dtruss(right, kc, kf)}
                eids = [eid(graph, src, dst) for src, dst in union]
                for c, f in naive_supports(graph, eids).values():
                    self.assertGreaterEqual(c, kc)
                    self.assertGreaterEqual(f, kf)


class TestKfProfile(unittest.TestCase):
    """Largest kf per edge at a fixed kc."""

    def test_flow_graph(self):
        """The flow triangle reaches kf=1 only at kc=0."""
        graph = g_flow()
        self.assertEqual(kf_profile(graph, 0), {0: 1, 1: 1, 2: 1})
        self.assertEqual(kf_profile(graph, 1), {})

    def test_reciprocal_triangle(self):
        """At kc=1 every reciprocal edge reaches kf=1."""
        self.assertEqual(kf_profile(g_rec3(), 1), {e: 1 for e in range(6)})

    def test_profile_matches_brute_force(self):
        """Each profile value is the largest kf the edge survives."""
        for graph in random_corpus(25, seed=25):
            for kc in range(3):
                profile = kf_profile(graph, kc)
                self.assertEqual(set(profile), naive_truss(graph, kc, 0))
                for e, kf in profile.items():
                    self.assertIn(e, naive_truss(graph, kc, kf))
                    self.assertNotIn(e, naive_truss(graph, kc, kf + 1))


class TestDecompose(unittest.TestCase):
    """Skyline trussness of every edge."""

    def assertSkylines(self, graph, expected):
        result = decompose(graph)
        actual = {graph.edge_label(e): str(sky) for e, sky in enumerate(result.skyline)}
        self.assertEqual(actual, expected)

    def test_cycle_graph(self):
        """Cycle edges get (1,0)."""
        expected = {("a", "b"): "(1,0)", ("b", "c"): "(1,0)", ("c", "a"): "(1,0)"}
        self.assertSkylines(g_cyc(), expected)

    def test_reciprocal_triangle(self):
        """Reciprocal edges get (1,1) and set both bounds."""
        result = decompose(g_rec3())
        self.assertTrue(all(str(sky) == "(1,1)" for sky in result.skyline))
        self.assertEqual((result.kc_max, result.kf_max), (1, 1))

    def test_mix(self):
        """Cycle edges get (1,0), flow edges (0,1)."""
        self.assertSkylines(
            g_mix(),
            {
                ("a", "b"): "(1,0)",
                ("b", "c"): "(1,0)",
                ("c", "a"): "(1,0)",
                ("c", "d"): "(0,1)",
                ("c", "e"): "(0,1)",
                ("e", "d"): "(0,1)",
            },
        )

    def test_triangle_free_edges_get_zero(self):
        """Edges in no triangle get (0,0)."""
        self.assertSkylines(graph_of("a b\nb c\n"), {("a", "b"): "(0,0)", ("b", "c"): "(0,0)"})

    def test_empty_graph(self):
        """The empty graph decomposes to nothing."""
        result = decompose(graph_of(""))
        self.assertEqual(result.skyline, ())
        self.assertEqual((result.kc_max, result.kf_max), (0, 0))

    def test_bounds_and_levels(self):
        """Level values, members and total membership."""
        result = decompose(g_mix())
        self.assertEqual((result.kc_max, result.kf_max), (1, 1))
        self.assertEqual(result.level_values(), [TrussnessPair(1, 0), TrussnessPair(0, 1)])
        self.assertEqual(result.total_membership(), 6)
        self.assertEqual(result.members(TrussnessPair(0, 1)), [3, 4, 5])

    def test_skylines_are_antichains(self):
        """No skyline member dominates another."""
        for graph in random_corpus(30, seed=26):
            for sky in decompose(graph).skyline:
                for a in sky:
                    for b in sky:
                        self.assertFalse(dominates(a, b))

    def test_process_pool_gives_same_skylines(self):
        """The process pool changes nothing."""
        for graph in random_corpus(3, seed=27):
            self.assertEqual(decompose(graph, threads=2), decompose(graph))

    def test_oracle_equivalence(self):
        """Covered edges equal the brute-force truss at every level."""
        for graph in random_corpus(30, seed=28):
            self._check_against_naive(graph)

    @pytest.mark.slow
    def test_oracle_equivalence_full_corpus(self):
        """Brute-force agreement over the whole random corpus."""
        for graph in random_corpus(500):
            self._check_against_naive(graph)

    def _check_against_naive(self, graph):
        result = decompose(graph)
        for kc in range(result.kc_max + 2):
            for kf in range(result.kf_max + 2):
                expected = naive_truss(graph, kc, kf)
                self.assertEqual(result.covered(TrussnessPair(kc, kf)), expected, (kc, kf))


class TestDecompositionFile(unittest.TestCase):
    """Text form of a decomposition."""

    def _written(self, graph):
        out = io.StringIO()
        write_decomposition(graph, decompose(graph), out)
        return out.getvalue()

    def test_format(self):
        """Headers first, then one edge line per eid."""
        lines = self._written(g_mix()).splitlines()
        self.assertEqual(lines[0], "# condtruss decomposition")
        self.assertEqual(lines[1], "# kc_max 1 kf_max 1")
        self.assertTrue(lines[2].startswith("# digest "))
        self.assertEqual(lines[3], "a b k:(1,0)")
        self.assertEqual(lines[-1], "e d k:(0,1)")

    def test_read_back(self):
        """Reading a written file gives the same decomposition."""
        graph = g_mix()
        result = read_decomposition(graph, io.StringIO(self._written(graph)))
        self.assertEqual(result, decompose(graph))

    def test_wrong_graph_rejected(self):
        """The digest header ties the file to its graph."""
        text = self._written(g_mix())
        with self.assertRaises(GraphMismatchError):
            read_decomposition(graph_of("a b\nb c\nc a\nc d\nc e\n"), io.StringIO(text))

    def test_missing_edge_rejected(self):
        """Every edge must have a line."""
        graph = g_mix()
        text = "\n".join(self._written(graph).splitlines()[:-1])
        with self.assertRaises(IndexFormatError):
            read_decomposition(graph, io.StringIO(text))

    def test_malformed_line_rejected(self):
        """A bad line is reported by number."""
        with self.assertRaises(IndexFormatError) as ctx:
            read_decomposition(g_cyc(), io.StringIO("a b (1,0)\n"))
        self.assertEqual(ctx.exception.offset, 1)
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_load_from_file(self):
        """A written decomposition file loads back to the same result."""
        graph = g_mix()
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "g.decomp"
            path.write_text(self._written(graph), encoding="utf-8")
            self.assertEqual(load_decomposition_file(graph, path), decompose(graph))

    def test_file_that_is_not_utf8(self):
        """Undecodable bytes are a format error at their line."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "g.decomp"
            path.write_bytes(b"# condtruss decomposition\n\xff b k:(1,0)\n")
            with self.assertRaises(IndexFormatError) as ctx:
                load_decomposition_file(g_cyc(), path)
        self.assertEqual(ctx.exception.offset, 2)
        self.assertIn("not UTF-8", str(ctx.exception))

    def test_unknown_edge_rejected(self):
        """Lines for edges the graph lacks are refused."""
        with self.assertRaises(IndexFormatError):
            read_decomposition(g_cyc(), io.StringIO("a c k:(1,0)\n"))


if __name__ == "__main__":
    unittest.main()
