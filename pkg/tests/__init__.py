"""
Test suite for condtruss.

Fixture graphs, the random corpus and the brute-force oracles live in `tests.graphs`.
"""
