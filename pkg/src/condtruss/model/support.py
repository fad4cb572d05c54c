"""
Per-edge cycle-support and flow-support counters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt


@dataclass(eq=False)
class SupportTable:
    """
    Mutable support counters indexed by eid.

    `csup[e]` counts distinct witnesses closing a cycle triangle with e,
    `fsup[e]` distinct witnesses closing a flow triangle, both measured in the
    subgraph of alive edges. Only one writer may peel at a time.
    """

    csup: npt.NDArray[np.int64]
    fsup: npt.NDArray[np.int64]
    alive: npt.NDArray[np.bool_]

    @classmethod
    def zeros(cls, edge_count: int) -> SupportTable:
        return cls(
            np.zeros(edge_count, dtype=np.int64),
            np.zeros(edge_count, dtype=np.int64),
            np.ones(edge_count, dtype=np.bool_),
        )

    def copy(self) -> SupportTable:
        return SupportTable(self.csup.copy(), self.fsup.copy(), self.alive.copy())

    def __len__(self) -> int:
        return int(self.alive.shape[0])

    def is_alive(self, eid: int) -> bool:
        return bool(self.alive[eid])

    def alive_edges(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.alive).tolist())

    def alive_count(self) -> int:
        return int(np.count_nonzero(self.alive))

    def pair(self, eid: int) -> tuple[int, int]:
        return int(self.csup[eid]), int(self.fsup[eid])

    def same_as(self, other: SupportTable) -> bool:
        """Equal liveness, and equal counters on alive edges."""
        if not np.array_equal(self.alive, other.alive):
            return False
        mask = self.alive
        return bool(
            np.array_equal(self.csup[mask], other.csup[mask])
            and np.array_equal(self.fsup[mask], other.fsup[mask])
        )
