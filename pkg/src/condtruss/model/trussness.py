"""
Trussness pairs, the dominance order on them, and skyline antichains.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class TrussnessPair:
    """A (kc, kf) pair: cycle-support and flow-support thresholds."""

    kc: int
    kf: int

    def __post_init__(self) -> None:
        if self.kc < 0 or self.kf < 0:
            raise ValueError(f"Trussness components must be non-negative: ({self.kc},{self.kf})")

    def dominates(self, other: TrussnessPair) -> bool:
        return dominates(self, other)

    def covers(self, other: TrussnessPair) -> bool:
        """Dominates or equals."""
        return self.kc >= other.kc and self.kf >= other.kf

    def __str__(self) -> str:
        return f"({self.kc},{self.kf})"


ZERO = TrussnessPair(0, 0)


def dominates(a: TrussnessPair, b: TrussnessPair) -> bool:
    """True iff a is no worse than b in both coordinates and strictly better in one."""
    return (a.kc > b.kc and a.kf >= b.kf) or (a.kc >= b.kc and a.kf > b.kf)


def dominates_or_equals(a: TrussnessPair, b: TrussnessPair) -> bool:
    return a.kc >= b.kc and a.kf >= b.kf


def level_order(pair: TrussnessPair) -> tuple[int, int]:
    """Sort key putting larger (kc, kf) first in lexicographic order."""
    return -pair.kc, -pair.kf


@dataclass(frozen=True)
class SkylineSet:
    """
    Antichain of trussness pairs, kc strictly decreasing and kf strictly
    increasing along `pairs`.
    """

    pairs: tuple[TrussnessPair, ...] = ()

    def __post_init__(self) -> None:
        for prev, cur in zip(self.pairs, self.pairs[1:], strict=False):
            if not (prev.kc > cur.kc and prev.kf < cur.kf):
                raise ValueError(f"Not a canonical skyline: {self.pairs}")

    def __iter__(self) -> Iterator[TrussnessPair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def covers(self, pair: TrussnessPair) -> bool:
        """Whether some member dominates or equals `pair`."""
        return any(member.kc >= pair.kc and member.kf >= pair.kf for member in self.pairs)

    @property
    def max_kc(self) -> int:
        return self.pairs[0].kc if self.pairs else 0

    @property
    def max_kf(self) -> int:
        return self.pairs[-1].kf if self.pairs else 0

    def __str__(self) -> str:
        return "".join(str(pair) for pair in self.pairs)

    @classmethod
    def parse(cls, text: str) -> SkylineSet:
        """Inverse of `str()`: "(2,0)(1,3)" -> SkylineSet."""
        matches = _PAIR_RE.findall(text)
        if "".join(f"({kc},{kf})" for kc, kf in matches) != text:
            raise ValueError(f"Malformed skyline: {text!r}")
        return skyline_of(TrussnessPair(int(kc), int(kf)) for kc, kf in matches)


_PAIR_RE = re.compile(r"\((\d+),(\d+)\)")


def skyline_of(pairs: Iterable[TrussnessPair]) -> SkylineSet:
    """Members not dominated by any other member, deduplicated and canonically sorted."""
    kept: list[TrussnessPair] = []
    best_kf = -1
    for pair in sorted(set(pairs), key=level_order):
        if pair.kf > best_kf:
            kept.append(pair)
            best_kf = pair.kf
    return SkylineSet(tuple(kept))
