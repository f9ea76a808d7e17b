"""Exact arithmetic of finite integer point sets and their difference multisets.

Finite homometry is a statement about weighted difference sets: two sets are
homometric exactly when every difference vector occurs with the same
multiplicity in both.  Everything in this module is integer-exact; equality
of difference multisets is plain map equality with no tolerance.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

IntPoint = tuple[int, ...]


def _validate_point(p, dim: int) -> IntPoint:
    pt = tuple(int(c) for c in p)
    if len(pt) != dim:
        raise ValueError(f"point {pt} has dimension {len(pt)}, expected {dim}")
    return pt


@dataclass(frozen=True)
class FinitePointSet:
    """A finite set of integer lattice points with an explicit dimension.

    Duplicates are absorbed (set semantics); mixing dimensions is an error
    rather than implicit padding.
    """

    points: frozenset[IntPoint]
    dim: int

    @classmethod
    def from_points(cls, pts: Iterable[Iterable[int]], dim: int | None = None) -> "FinitePointSet":
        pts = list(pts)
        if dim is None:
            if not pts:
                raise ValueError("dimension required for an empty point set")
            dim = len(tuple(pts[0]))
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        return cls(frozenset(_validate_point(p, dim) for p in pts), dim)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[IntPoint]:
        return iter(sorted(self.points))

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "points": [list(p) for p in sorted(self.points)]})

    @classmethod
    def from_json(cls, text: str) -> "FinitePointSet":
        obj = json.loads(text)
        return cls.from_points(obj["points"], dim=obj["dim"])


@dataclass(frozen=True)
class DifferenceMultiset:
    """Map from difference vector to its (positive) multiplicity."""

    entries: Mapping[IntPoint, int]

    def __getitem__(self, z) -> int:
        return self.entries.get(tuple(z), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferenceMultiset):
            return NotImplemented
        return dict(self.entries) == dict(other.entries)

    def to_json(self) -> str:
        items = sorted(self.entries.items())
        return json.dumps({"entries": [{"z": list(z), "m": m} for z, m in items]})

    @classmethod
    def from_json(cls, text: str) -> "DifferenceMultiset":
        obj = json.loads(text)
        return cls({tuple(e["z"]): int(e["m"]) for e in obj["entries"]})


def difference_multiset(fset: FinitePointSet) -> DifferenceMultiset:
    """All pairwise differences x - y of the set, with multiplicities.

    The result always has total multiplicity ``|F|**2``, carries the zero
    vector with multiplicity ``|F|`` and is centrally symmetric.
    """
    if len(fset) == 0:
        raise ValueError("empty point set")
    counts: Counter[IntPoint] = Counter()
    pts = list(fset.points)
    for x in pts:
        for y in pts:
            counts[tuple(a - b for a, b in zip(x, y))] += 1
    return DifferenceMultiset(dict(counts))


def are_homometric(f: FinitePointSet, g: FinitePointSet) -> bool:
    """True when both sets share the same weighted difference set."""
    if f.dim != g.dim:
        raise ValueError(f"dimension mismatch: {f.dim} vs {g.dim}")
    return difference_multiset(f) == difference_multiset(g)


def transform(fset: FinitePointSet, t: Iterable[int], invert: bool = False) -> FinitePointSet:
    """Translate by ``t``, optionally composing with inversion: t + F or t - F.

    Either operation preserves the difference multiset.
    """
    tv = _validate_point(t, fset.dim)
    sign = -1 if invert else 1
    moved = frozenset(tuple(ti + sign * xi for ti, xi in zip(tv, p)) for p in fset.points)
    return FinitePointSet(moved, fset.dim)


_F1 = (
    (0, 0), (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
    (3, 3), (3, 4), (3, 5), (4, 4), (4, 5),
)
_F2 = (
    (0, 0), (0, 1), (1, 0), (1, 1), (1, 2),
    (1, 3), (1, 4), (2, 2), (2, 3), (2, 4),
    (2, 5), (3, 3), (3, 4), (3, 5), (4, 5),
)


def canonical_pair() -> tuple[FinitePointSet, FinitePointSet]:
    """The standard planar homometric pair of 15-point sets F1, F2."""
    return (
        FinitePointSet.from_points(_F1, dim=2),
        FinitePointSet.from_points(_F2, dim=2),
    )
