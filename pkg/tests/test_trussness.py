#!/usr/bin/env python3
"""
Unit tests for trussness pairs, dominance and skylines.
"""

import unittest

from condtruss import SkylineSet, TrussnessPair, dominates, dominates_or_equals, skyline_of


def tp(kc: int, kf: int) -> TrussnessPair:
    return TrussnessPair(kc, kf)


class TestDominance(unittest.TestCase):
    """The strict and reflexive dominance orders."""

    def test_strict_in_both(self):
        """Better in both coordinates dominates."""
        self.assertTrue(dominates(tp(2, 2), tp(1, 1)))

    def test_incomparable(self):
        """Trade-offs are incomparable."""
        self.assertFalse(dominates(tp(2, 1), tp(1, 2)))
        self.assertFalse(dominates(tp(1, 2), tp(2, 1)))

    def test_equal_is_not_strict(self):
        """Equal pairs cover but do not dominate."""
        self.assertFalse(dominates(tp(1, 1), tp(1, 1)))
        self.assertTrue(dominates_or_equals(tp(1, 1), tp(1, 1)))

    def test_one_coordinate_better(self):
        """Better in one and equal in the other dominates."""
        self.assertTrue(dominates(tp(1, 3), tp(1, 2)))
        self.assertTrue(tp(3, 0).dominates(tp(2, 0)))
        self.assertTrue(tp(3, 0).covers(tp(3, 0)))

    def test_negative_components_rejected(self):
        """Components are non-negative."""
        with self.assertRaises(ValueError):
            tp(-1, 0)

    def test_str(self):
        """Pairs print as (kc,kf)."""
        self.assertEqual(str(tp(2, 5)), "(2,5)")


class TestSkyline(unittest.TestCase):
    """Antichains of non-dominated pairs."""

    def test_removes_dominated(self):
        """Dominated pairs are dropped."""
        sky = skyline_of([tp(1, 1), tp(0, 3), tp(1, 0), tp(0, 0)])
        self.assertEqual(list(sky), [tp(1, 1), tp(0, 3)])

    def test_empty(self):
        """The skyline of nothing is empty."""
        sky = skyline_of([])
        self.assertEqual(len(sky), 0)
        self.assertFalse(sky)

    def test_deduplicates(self):
        """Repeated pairs appear once."""
        self.assertEqual(list(skyline_of([tp(2, 2), tp(2, 2)])), [tp(2, 2)])

    def test_members_pairwise_incomparable(self):
        """Skyline members never dominate each other."""
        pairs = [tp(kc, kf) for kc in range(4) for kf in range(4) if kc + kf <= 4]
        sky = skyline_of(pairs)
        self.assertEqual(list(sky), [tp(3, 1), tp(2, 2), tp(1, 3)])
        for a in sky:
            for b in sky:
                self.assertFalse(dominates(a, b))

    def test_covers(self):
        """A skyline covers whatever one member covers."""
        sky = skyline_of([tp(3, 0), tp(1, 2)])
        self.assertTrue(sky.covers(tp(2, 0)))
        self.assertTrue(sky.covers(tp(1, 2)))
        self.assertFalse(sky.covers(tp(2, 1)))
        self.assertIn(tp(1, 2), sky)
        self.assertNotIn(tp(1, 1), sky)
        self.assertEqual((sky.max_kc, sky.max_kf), (3, 2))

    def test_non_canonical_rejected(self):
        """Dominated or unsorted members are refused."""
        with self.assertRaises(ValueError):
            SkylineSet((tp(1, 1), tp(2, 0)))
        with self.assertRaises(ValueError):
            SkylineSet((tp(2, 1), tp(1, 1)))

    def test_text_form(self):
        """Text form lists members and parses back."""
        sky = skyline_of([tp(0, 3), tp(2, 0)])
        self.assertEqual(str(sky), "(2,0)(0,3)")
        self.assertEqual(SkylineSet.parse("(2,0)(0,3)"), sky)
        self.assertEqual(SkylineSet.parse(""), SkylineSet())

    def test_malformed_text_rejected(self):
        """Malformed text raises ValueError."""
        for text in ("(2,0", "(a,1)", "(1,1) (0,2)", "x(1,1)"):
            with self.assertRaises(ValueError, msg=text):
                SkylineSet.parse(text)


if __name__ == "__main__":
    unittest.main()
