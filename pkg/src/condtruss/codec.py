"""
Binary encoding of the summarized-graph index.

Layout, all integers little-endian:

    "CDT1" | version u32 | digest 32B | |V| u64 | |E| u64 | supernodes u64 | superedges u64
    labels:     per vertex, byte length u64 + UTF-8 bytes
    edges:      per edge, src u64 + dst u64
    supernodes: per supernode, kc u32 + kf u32 + member count u64 + member eids u64[]
    superedges: per pair, sid u64 + sid u64, sorted
    membership: per vertex, count u64 + sids u64[]
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Any

import numpy as np
import numpy.typing as npt

from .errors import IndexFormatError
from .model import SummarizedGraph, Supernode, TrussnessPair

MAGIC = b"CDT1"
VERSION = 1

_HEAD = struct.Struct("<4sI32sQQQQ")
_U64 = struct.Struct("<Q")
_PAIR = struct.Struct("<II")
_DIGEST_SIZE = 32


def _u64s(values: object) -> bytes:
    return np.asarray(values, dtype="<u8").tobytes()


def serialize(index: SummarizedGraph) -> bytes:
    """Encode the index; equal indexes always give identical bytes."""
    if len(index.digest) != _DIGEST_SIZE:
        raise ValueError("Index digest must be 32 bytes")
    chunks = [
        _HEAD.pack(
            MAGIC,
            VERSION,
            index.digest,
            index.num_vertices,
            index.num_edges,
            len(index.supernodes),
            len(index.superedges),
        )
    ]
    for label in index.labels:
        encoded = label.encode("utf-8")
        chunks.append(_U64.pack(len(encoded)))
        chunks.append(encoded)
    chunks.append(_u64s(index.edges))
    for node in index.supernodes:
        chunks.append(_PAIR.pack(node.trussness.kc, node.trussness.kf))
        chunks.append(_U64.pack(len(node.members)))
        chunks.append(_u64s(node.members))
    chunks.append(_u64s(index.superedges))
    for sids in index.vertex_membership:
        chunks.append(_U64.pack(len(sids)))
        chunks.append(_u64s(sids))
    return b"".join(chunks)


class _Reader:
    def __init__(self, data: bytes):
        self._data = memoryview(data)
        self.offset = 0

    def take(self, size: int, what: str) -> memoryview:
        end = self.offset + size
        if size < 0 or end > len(self._data):
            raise IndexFormatError(self.offset, f"truncated while reading {what}")
        chunk = self._data[self.offset : end]
        self.offset = end
        return chunk

    def unpack(self, layout: struct.Struct, what: str) -> tuple[Any, ...]:
        return layout.unpack(self.take(layout.size, what))

    def u64(self, what: str) -> int:
        return int(self.unpack(_U64, what)[0])

    def u64_array(self, count: int, what: str) -> npt.NDArray[np.uint64]:
        if count > len(self._data):
            raise IndexFormatError(self.offset, f"implausible {what} count {count}")
        return np.frombuffer(self.take(8 * count, what), dtype="<u8")

    def ids(
        self, count: int, bound: int, what: str, increasing: bool = False
    ) -> tuple[int, ...]:
        start = self.offset
        values = self.u64_array(count, what)
        if count and int(values.max()) >= bound:
            raise IndexFormatError(start, f"{what} out of range")
        if increasing:
            unordered = np.flatnonzero(values[1:] <= values[:-1])
            if unordered.size:
                offset = start + 8 * (int(unordered[0]) + 1)
                raise IndexFormatError(offset, f"{what} not strictly increasing")
        return tuple(values.tolist())

    def at_end(self) -> bool:
        return self.offset == len(self._data)


def deserialize(data: bytes) -> SummarizedGraph:
    """Decode bytes produced by `serialize`; raises IndexFormatError on bad input."""
    reader = _Reader(data)
    magic, version, digest, n, m, node_count, link_count = reader.unpack(_HEAD, "header")
    if magic != MAGIC:
        raise IndexFormatError(0, f"bad magic {bytes(magic)!r}")
    if version != VERSION:
        raise IndexFormatError(4, f"unsupported version {version}")

    labels: list[str] = []
    for _ in range(n):
        size = reader.u64("label length")
        start = reader.offset
        try:
            labels.append(str(reader.take(size, "label"), "utf-8"))
        except UnicodeDecodeError:
            raise IndexFormatError(start, "label is not UTF-8") from None

    flat = reader.ids(2 * m, n, "edge table")
    edges = tuple(zip(flat[0::2], flat[1::2], strict=True))

    supernodes: list[Supernode] = []
    for sid in range(node_count):
        start = reader.offset
        kc, kf = reader.unpack(_PAIR, "supernode trussness")
        members = reader.ids(reader.u64("member count"), m, "member eids", increasing=True)
        if not members:
            raise IndexFormatError(start, f"supernode {sid} has no members")
        supernodes.append(Supernode(sid, TrussnessPair(kc, kf), members))

    start = reader.offset
    flat = reader.ids(2 * link_count, node_count, "superedges")
    superedges = tuple(zip(flat[0::2], flat[1::2], strict=True))
    for i, (a, b) in enumerate(superedges):
        if a >= b:
            raise IndexFormatError(start + 16 * i, f"superedge ({a},{b}) is not an ordered pair")
        if i and superedges[i - 1] >= (a, b):
            raise IndexFormatError(start + 16 * i, "superedges not sorted or repeated")

    membership: list[tuple[int, ...]] = []
    for _ in range(n):
        count = reader.u64("membership count")
        membership.append(reader.ids(count, node_count, "membership", increasing=True))

    if not reader.at_end():
        raise IndexFormatError(reader.offset, "trailing bytes after index")

    return SummarizedGraph(
        digest=bytes(digest),
        labels=tuple(labels),
        edges=edges,
        supernodes=tuple(supernodes),
        superedges=superedges,
        vertex_membership=tuple(membership),
    )


def save_index(index: SummarizedGraph, path: str | Path) -> int:
    """Write the encoded index; returns the byte size."""
    data = serialize(index)
    Path(path).write_bytes(data)
    return len(data)


def load_index(path: str | Path) -> SummarizedGraph:
    return deserialize(Path(path).read_bytes())
