"""
condtruss - community search on directed graphs with a summarized D-truss index.

This library provides:
- Edge-list ingestion into an immutable, normalized directed graph
- Cycle/flow support counting and D-truss decomposition into skyline trussness
- The summarized-graph index (supernodes, superedges, vertex memberships)
- Maximal D-truss queries on the index, plus a direct baseline
"""

__version__ = "0.1.0"

import warnings

from beartype import BeartypeConf, beartype
from beartype.roar import BeartypeCallHintViolation

from .codec import deserialize, load_index, save_index, serialize
from .decomposition import (
    DecompositionResult,
    decompose,
    kf_profile,
    load_decomposition_file,
    max_dtruss,
    read_decomposition,
    write_decomposition,
)
from .errors import (
    CondTrussError,
    DeadEdgeError,
    EdgeListParseError,
    GraphMismatchError,
    IndexFormatError,
    LabelLookupError,
    UsageError,
)
from .index import build_index, connected_classes, stats
from .loader import load_edge_list, load_edge_list_file, write_edge_list
from .model import (
    CommunityResult,
    DiGraph,
    DirectedEdge,
    IndexStats,
    SkylineSet,
    SummarizedGraph,
    Supernode,
    SupportTable,
    TrussnessPair,
    VertexId,
    dominates,
    dominates_or_equals,
    skyline_of,
)
from .query import direct_find, find_mdtruss
from .triangles import TriangleRole, compute_supports, peel_edge, triangle_role

_beartype_conf = BeartypeConf(
    warning_cls_on_decorator_exception=UserWarning,
    is_color=False,
    violation_type=BeartypeCallHintViolation,
    is_debug=False,
)


def _safe_beartype_class(cls: type) -> type:
    """Apply beartype to a class, with error handling."""
    try:
        return beartype(cls, conf=_beartype_conf)  # type: ignore[call-overload,no-any-return]
    except Exception as e:
        warnings.warn(f"Beartype failed to apply to {cls.__name__}: {e}", UserWarning, stacklevel=2)
        return cls


# Value types users construct by hand get runtime checks; the numpy-backed
# graph and support table are left alone.
TrussnessPair = _safe_beartype_class(TrussnessPair)  # type: ignore[misc,assignment]
SkylineSet = _safe_beartype_class(SkylineSet)  # type: ignore[misc,assignment]
Supernode = _safe_beartype_class(Supernode)  # type: ignore[misc,assignment]
CommunityResult = _safe_beartype_class(CommunityResult)  # type: ignore[misc,assignment]

__all__ = [
    "__version__",
    "VertexId",
    "DirectedEdge",
    "DiGraph",
    "SupportTable",
    "TrussnessPair",
    "SkylineSet",
    "DecompositionResult",
    "Supernode",
    "SummarizedGraph",
    "IndexStats",
    "CommunityResult",
    "TriangleRole",
    "load_edge_list",
    "load_edge_list_file",
    "write_edge_list",
    "triangle_role",
    "compute_supports",
    "peel_edge",
    "dominates",
    "dominates_or_equals",
    "skyline_of",
    "max_dtruss",
    "kf_profile",
    "decompose",
    "write_decomposition",
    "read_decomposition",
    "load_decomposition_file",
    "connected_classes",
    "build_index",
    "stats",
    "serialize",
    "deserialize",
    "save_index",
    "load_index",
    "find_mdtruss",
    "direct_find",
    "CondTrussError",
    "UsageError",
    "DeadEdgeError",
    "GraphMismatchError",
    "EdgeListParseError",
    "IndexFormatError",
    "LabelLookupError",
]
