"""
Model subpackage containing the immutable graph, trussness and index types.

Kept free of algorithms so the algorithm modules can import it without cycles.
"""

from .community import CommunityResult
from .graph import DiGraph, DirectedEdge, GraphStats, VertexId
from .summary import IndexStats, SummarizedGraph, Supernode
from .support import SupportTable
from .trussness import (
    ZERO,
    SkylineSet,
    TrussnessPair,
    dominates,
    dominates_or_equals,
    skyline_of,
)

__all__ = [
    "VertexId",
    "DirectedEdge",
    "DiGraph",
    "GraphStats",
    "SupportTable",
    "TrussnessPair",
    "SkylineSet",
    "ZERO",
    "dominates",
    "dominates_or_equals",
    "skyline_of",
    "Supernode",
    "SummarizedGraph",
    "IndexStats",
    "CommunityResult",
]
