"""Exact sup-norm points and the conversions between point sets and pair families."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionError,
    DomainError,
    EquilatError,
    FreshCoordinateError,
    NotEquilateralError,
    NotLinkedError,
)
from .families import Pair, PairFamily, from_mask, is_linked

Rational = Fraction
SupPoint = tuple  # tuple[Fraction, ...]

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, (float, bool)):
        raise EquilatError(f"{x!r} is not accepted; use Fraction, int or a 'p/q' string")
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise EquilatError(f"not a rational value: {x!r}") from None


def point(*coords: RationalLike) -> SupPoint:
    """Build a point; ``point(0, "1/3", Fraction(1, 2))``."""
    return tuple(as_rational(c) for c in coords)


class PointSet:
    """An ordered set of distinct points of a fixed dimension."""

    __slots__ = ("dim", "points")

    def __init__(self, dim: int, points: Iterable[Sequence[RationalLike]] = ()):
        if dim < 1:
            raise DomainError("dimension must be positive")
        pts = tuple(tuple(as_rational(c) for c in p) for p in points)
        for p in pts:
            if len(p) != dim:
                raise DimensionError(f"point of length {len(p)} in a set of dimension {dim}")
        if len(set(pts)) != len(pts):
            raise EquilatError("duplicate point in point set")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    @classmethod
    def of(cls, *points: Sequence[RationalLike]) -> "PointSet":
        if not points:
            raise DomainError("PointSet.of needs at least one point to infer the dimension")
        return cls(len(points[0]), points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and set(self.points) == set(other.points)

    def __hash__(self):
        return hash((self.dim, frozenset(self.points)))

    def __repr__(self):
        body = ", ".join("(" + ", ".join(str(c) for c in p) + ")" for p in self.points)
        return f"PointSet(dim={self.dim}, [{body}])"

    def with_point(self, p: Sequence[RationalLike]) -> "PointSet":
        return PointSet(self.dim, self.points + (tuple(p),))


def sup_norm(x: Sequence[Fraction]) -> Fraction:
    return max((abs(c) for c in x), default=ZERO)


def sup_distance(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise DimensionError(f"cannot compare points of dimension {len(x)} and {len(y)}")
    return max((abs(a - b) for a, b in zip(x, y)), default=ZERO)


def _positive(value: RationalLike, name: str) -> Fraction:
    value = as_rational(value)
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def is_equilateral(S: PointSet, lam: RationalLike = 1) -> bool:
    lam = _positive(lam, "lambda")
    return all(sup_distance(x, y) == lam for x, y in combinations(S.points, 2))


def is_separated(S: PointSet, delta: RationalLike) -> bool:
    delta = _positive(delta, "delta")
    return all(sup_distance(x, y) >= delta for x, y in combinations(S.points, 2))


def _in_interval(S: PointSet, lo: Fraction, hi: Fraction) -> bool:
    return all(lo <= c <= hi for p in S for c in p)


def reduce_to_unit_box(S: PointSet) -> PointSet:
    """Translate by the coordinatewise minimum so every value lies in [0, 1].

    Requires all pairwise distances to be at most 1; distances are unchanged.
    """
    for x, y in combinations(S.points, 2):
        if sup_distance(x, y) > 1:
            raise DomainError("reduce_to_unit_box needs pairwise distances <= 1")
    if not S.points:
        return S
    low = [min(p[a] for p in S) for a in range(S.dim)]
    return PointSet(S.dim, [tuple(c - m for c, m in zip(p, low)) for p in S])


def normalize_to_sphere(S: PointSet, lam: RationalLike, x0: Sequence[RationalLike]) -> PointSet:
    """Map ``x -> (x - x0) / lam``; the result is 1-equilateral and contains the origin."""
    lam = _positive(lam, "lambda")
    x0 = tuple(as_rational(c) for c in x0)
    if x0 not in S:
        raise DomainError("x0 is not a member of the point set")
    if not is_equilateral(S, lam):
        raise NotEquilateralError(f"point set is not {lam}-equilateral")
    return PointSet(S.dim, [tuple((c - o) / lam for c, o in zip(p, x0)) for p in S])


def zero_one_pair(p: Sequence[Fraction]) -> Pair:
    """The pair (zeros of p, ones of p) as coordinate index sets."""
    a = b = 0
    for i, c in enumerate(p):
        if c == 0:
            a |= 1 << i
        elif c == 1:
            b |= 1 << i
    return Pair(a, b)


def family_from_points(S: PointSet) -> tuple[PairFamily, bool]:
    """Zero/one level-set family of a point set in [0, 1]^d, and whether it is linked.

    The family is indexed by point order (so repeated pairs are kept); its
    linkedness coincides with ``S`` being 1-equilateral. A lone point with no
    0 or 1 coordinate is rejected: it is trivially equilateral but its pair
    would be empty.
    """
    if not _in_interval(S, ZERO, ONE):
        raise DomainError("family_from_points needs every coordinate in [0, 1]")
    if len(S) == 1 and not zero_one_pair(S[0]).support:
        raise DomainError("a single point without 0 or 1 coordinates gives the empty pair")
    F = PairFamily(S.dim, [zero_one_pair(p) for p in S], indexed=True)
    return F, is_linked(F)


def _check_interior(interior: RationalLike) -> Fraction:
    t = as_rational(interior)
    if not 0 < t < 1:
        raise DomainError(f"interior value must lie strictly between 0 and 1, got {t}")
    return t


def realize_pair(p: Pair, n: int, interior: Fraction, anchored: bool = True) -> SupPoint:
    """Realize one pair as a point: 0 on A, 1 on B, ``interior`` elsewhere.

    With ``anchored`` (the default) a one-sided pair also gets the opposite
    extreme at the least free coordinate, or is constant when the side is
    the whole ground set.
    """
    full = (1 << n) - 1
    values = [interior] * n
    for i in from_mask(p.a):
        values[i] = ZERO
    for i in from_mask(p.b):
        values[i] = ONE
    if anchored:
        if not p.a:
            free = full & ~p.b
            if free:
                values[(free & -free).bit_length() - 1] = ZERO
        elif not p.b:
            free = full & ~p.a
            if free:
                values[(free & -free).bit_length() - 1] = ONE
    return tuple(values)


def points_from_family(F: PairFamily, interior: RationalLike = Fraction(1, 2),
                       anchored: bool = True) -> PointSet:
    """Realize a linked family as a 1-equilateral subset of [0, 1]^n, one point per pair."""
    t = _check_interior(interior)
    if not is_linked(F):
        raise NotLinkedError("points_from_family needs a linked family")
    return PointSet(F.ground_size, [realize_pair(p, F.ground_size, t, anchored) for p in F])


def two_equilateral_from_family(F: PairFamily) -> PointSet:
    """Realize a linked family as a 2-equilateral subset of the unit ball.

    Values are 1 on A, -1 on B and 0 elsewhere; it is the map ``v -> 1 - 2v``
    applied to :func:`points_from_family` with interior 1/2.
    """
    S = points_from_family(F, Fraction(1, 2))
    return PointSet(S.dim, [tuple(1 - 2 * c for c in p) for p in S])


def separated_to_family(D: PointSet, epsilon: RationalLike) -> PairFamily:
    """Threshold a (1+eps)-separated subset of the unit ball at -eps/2 and eps/2.

    Point ``f`` gives ``A = {f <= -eps/2}``, ``B = {f >= eps/2}``.
    """
    eps = _positive(epsilon, "epsilon")
    if not _in_interval(D, -ONE, ONE):
        raise DomainError("separated_to_family needs points in the unit ball")
    if not is_separated(D, 1 + eps):
        raise DomainError(f"point set is not {1 + eps}-separated")
    half = eps / 2
    pairs = []
    for f in D:
        a = b = 0
        for i, c in enumerate(f):
            if c <= -half:
                a |= 1 << i
            elif c >= half:
                b |= 1 << i
        if not a | b:
            raise DomainError(f"point has sup-norm below eps/2 = {half}; its pair would be empty")
        pairs.append(Pair(a, b))
    return PairFamily(D.dim, pairs)


def fresh_coordinate_extension(S: PointSet, coord: int) -> PointSet:
    """Append the basis vector ``e_coord`` to a 1-equilateral set in the unit ball
    that vanishes on ``coord``."""
    if not 0 <= coord < S.dim:
        raise DimensionError(f"coordinate {coord} out of range for dimension {S.dim}")
    if not is_equilateral(S, 1):
        raise NotEquilateralError("point set is not 1-equilateral")
    if not _in_interval(S, -ONE, ONE):
        raise DomainError("point set is not contained in the unit ball")
    bad = [p for p in S if p[coord] != 0]
    if bad:
        raise FreshCoordinateError(f"{len(bad)} point(s) are nonzero at coordinate {coord}")
    e = tuple(ONE if i == coord else ZERO for i in range(S.dim))
    if e in S:
        raise EquilatError(f"basis vector e_{coord} already belongs to the set")
    return S.with_point(e)
