"""Exact one-point extensions of 1-equilateral sets in d-dimensional sup-norm space.

For a 1-equilateral set ``S`` the points ``alpha`` with ``|alpha - p| = 1`` for
every ``p`` in ``S`` form a finite union of boxes. ``alpha`` must lie in the
bounding box ``prod_a [max_k p_k(a) - 1, min_k p_k(a) + 1]`` and, for every
``p_k``, attain equality ``alpha_a = p_k(a) + s`` on some witness coordinate
``a`` with sign ``s``. Fixing one witness per point pins some coordinates and
leaves the rest free inside the bounding box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .errors import CapExceededError, DomainError, NotEquilateralError
from .supnorm import PointSet, SupPoint, is_equilateral, sup_distance

MAX_POINTS = 12
MAX_DIM = 8
MAX_GRID_TUPLES = 2_000_000


@dataclass(frozen=True, order=True)
class Box:
    """Closed box ``prod_a [lo[a], hi[a]]``; a coordinate with ``lo == hi`` is pinned."""

    lo: SupPoint
    hi: SupPoint

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise DomainError("box corners have different dimensions")
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise DomainError("box has lo > hi")

    def __contains__(self, x) -> bool:
        return all(l <= c <= h for l, c, h in zip(self.lo, x, self.hi))

    def contains_box(self, other: "Box") -> bool:
        return all(
            l <= ol and oh <= h for l, h, ol, oh in zip(self.lo, self.hi, other.lo, other.hi)
        )

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Region:
    """A canonical union of boxes: no box inside another, sorted by ``(lo, hi)``."""

    dim: int
    boxes: tuple[Box, ...]

    @classmethod
    def canonical(cls, dim: int, boxes) -> "Region":
        uniq = sorted(set(boxes))
        kept = [
            b for b in uniq
            if not any(o != b and o.contains_box(b) for o in uniq)
        ]
        return cls(dim, tuple(kept))

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    def __contains__(self, x) -> bool:
        return any(x in b for b in self.boxes)

    def __len__(self):
        return len(self.boxes)


@dataclass(frozen=True)
class WitnessAssignment:
    """One ``(coordinate, sign)`` per point, pinning ``alpha[coord] = p[coord] + sign``."""

    witnesses: tuple[tuple[int, int], ...]

    def pins(self, S: PointSet) -> dict[int, Fraction]:
        return {a: S[k][a] + s for k, (a, s) in enumerate(self.witnesses)}


def _check_input(S: PointSet, enforce_caps: bool) -> None:
    if len(S) == 0:
        raise DomainError("point set is empty")
    if enforce_caps and (len(S) > MAX_POINTS or S.dim > MAX_DIM):
        raise CapExceededError(
            f"extension search is capped at |S| <= {MAX_POINTS}, d <= {MAX_DIM} "
            f"(got |S| = {len(S)}, d = {S.dim})"
        )
    if not is_equilateral(S, 1):
        raise NotEquilateralError("point set is not 1-equilateral")


def bounding_box(S: PointSet) -> Box:
    lo = tuple(max(p[a] for p in S) - 1 for a in range(S.dim))
    hi = tuple(min(p[a] for p in S) + 1 for a in range(S.dim))
    return Box(lo, hi)


def iter_witness_assignments(S: PointSet, enforce_caps: bool = True) -> Iterator[WitnessAssignment]:
    """Consistent witness assignments, pruned to those whose pins are all needed.

    Points are visited in order. A point already at distance 1 from the
    current pins reuses the first such pin instead of branching, so every
    minimal pin pattern is produced (possibly alongside redundant ones that
    :meth:`Region.canonical` drops).
    """
    _check_input(S, enforce_caps)
    box = bounding_box(S)
    pts = S.points
    d = S.dim
    pins: dict[int, Fraction] = {}
    chosen: list[tuple[int, int]] = []

    def rec(k: int) -> Iterator[WitnessAssignment]:
        if k == len(pts):
            yield WitnessAssignment(tuple(chosen))
            return
        p = pts[k]
        for a in sorted(pins):
            diff = pins[a] - p[a]
            if diff == 1 or diff == -1:
                chosen.append((a, int(diff)))
                yield from rec(k + 1)
                chosen.pop()
                return
        for a in range(d):
            if a in pins:
                continue
            for s in (-1, 1):
                v = p[a] + s
                if box.lo[a] <= v <= box.hi[a]:
                    pins[a] = v
                    chosen.append((a, s))
                    yield from rec(k + 1)
                    chosen.pop()
                    del pins[a]

    yield from rec(0)


def extension_region(S: PointSet, enforce_caps: bool = True) -> Region:
    """All ``alpha`` at sup-distance exactly 1 from every member of ``S``.

    The search covers the whole space, not only [0, 1]^d. Members of ``S``
    never appear (each is at distance 0 from itself).
    """
    bb = bounding_box(S) if len(S) else None
    boxes = []
    for w in iter_witness_assignments(S, enforce_caps):
        pins = w.pins(S)
        lo = tuple(pins.get(a, bb.lo[a]) for a in range(S.dim))
        hi = tuple(pins.get(a, bb.hi[a]) for a in range(S.dim))
        boxes.append(Box(lo, hi))
    return Region.canonical(S.dim, boxes)


def find_extension(S: PointSet, enforce_caps: bool = True) -> Optional[SupPoint]:
    """Lexicographically least point of the extension region, or ``None``."""
    region = extension_region(S, enforce_caps)
    if region.is_empty:
        return None
    return min(b.lo for b in region.boxes)


def is_maximal_equilateral(S: PointSet, enforce_caps: bool = True) -> bool:
    return extension_region(S, enforce_caps).is_empty


def critical_values(S: PointSet) -> list[list[Fraction]]:
    return [
        sorted({p[a] + s for p in S for s in (-1, 0, 1)})
        for a in range(S.dim)
    ]


def iter_grid_extensions(S: PointSet, enforce_caps: bool = True) -> Iterator[SupPoint]:
    """Brute-force scan of critical-value tuples, in lexicographic order.

    Independent of the witness search: only :func:`sup_distance` is used.
    """
    if len(S) == 0:
        raise DomainError("point set is empty")
    if not is_equilateral(S, 1):
        raise NotEquilateralError("point set is not 1-equilateral")
    grid = critical_values(S)
    total = 1
    for g in grid:
        total *= len(g)
    if enforce_caps and total > MAX_GRID_TUPLES:
        raise CapExceededError(f"grid oracle would scan {total} tuples (cap {MAX_GRID_TUPLES})")
    for alpha in product(*grid):
        if all(sup_distance(alpha, p) == 1 for p in S):
            yield alpha


def grid_oracle_extension(S: PointSet, enforce_caps: bool = True) -> Optional[SupPoint]:
    return next(iter_grid_extensions(S, enforce_caps), None)


@dataclass(frozen=True)
class CoordinateReport:
    coordinate: int
    status: str  # "no-extension" | "pinned" | "interval"
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    @property
    def value(self) -> Optional[Fraction]:
        return self.lo if self.status == "pinned" else None


def forced_coordinates(S: PointSet, enforce_caps: bool = True) -> list[CoordinateReport]:
    """Per coordinate: no extension at all, a single forced value, or the hull of its projection."""
    region = extension_region(S, enforce_caps)
    out = []
    for a in range(S.dim):
        if region.is_empty:
            out.append(CoordinateReport(a, "no-extension"))
            continue
        lo = min(b.lo[a] for b in region.boxes)
        hi = max(b.hi[a] for b in region.boxes)
        out.append(CoordinateReport(a, "pinned" if lo == hi else "interval", lo, hi))
    return out
