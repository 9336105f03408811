"""Dyadic-tree combinatorics and explicit equilateral constructions from 0/1 sequences.

Tree nodes are tuples over ``{0, 1}``. Word positions are 1-based in the
constructions below (``s(k)`` for ``k <= |s|``); position ``k`` maps to ground
element / coordinate ``k - 1``.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import CapExceededError, DomainError, EquilatError
from .families import Pair, PairFamily
from .supnorm import PointSet, RationalLike, as_rational

TreeNode = tuple  # tuple[int, ...]
Antichain = tuple  # tuple[TreeNode, ...]

MAX_ENUM_DEPTH = 4
MAX_ITER_DEPTH = 5


class NotAnAntichainWarning(UserWarning):
    pass


def flip(bit: int) -> int:
    return 1 - bit


def node(word: str) -> TreeNode:
    """``node("101") == (1, 0, 1)``."""
    if any(c not in "01" for c in word):
        raise DomainError(f"tree node must be a 0/1 string, got {word!r}")
    return tuple(int(c) for c in word)


def node_str(s: TreeNode) -> str:
    return "".join(str(b) for b in s)


def is_prefix(s: TreeNode, t: TreeNode) -> bool:
    return len(s) <= len(t) and t[: len(s)] == s


def comparable(s: TreeNode, t: TreeNode) -> bool:
    return is_prefix(s, t) or is_prefix(t, s)


def is_antichain(nodes: Sequence[TreeNode]) -> bool:
    nodes = [tuple(s) for s in nodes]
    seen = set(nodes)
    if len(seen) != len(nodes):
        return False
    # comparable members always include a proper prefix of one inside the set
    return not any(s[:k] in seen for s in nodes for k in range(len(s)))


@dataclass(frozen=True)
class SigmaSequence:
    """A 0/1 sequence: explicit ``bits`` plus an optional constant ``tail``.

    ``tail = (onset, value)`` means ``sigma_n = value`` for every ``n >= onset``
    (1-based); the explicit bits from ``onset`` on must agree with it.
    """

    bits: tuple[int, ...]
    tail: Optional[tuple[int, int]] = None

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError("sigma bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)
        if self.tail is not None:
            onset, value = (int(x) for x in self.tail)
            if value not in (0, 1):
                raise DomainError("tail value must be 0 or 1")
            if not 1 <= onset <= len(bits) + 1:
                raise DomainError(f"tail onset {onset} leaves undefined positions")
            if any(b != value for b in bits[onset - 1:]):
                raise DomainError("explicit bits contradict the constant tail")
            object.__setattr__(self, "tail", (onset, value))

    @classmethod
    def parse(cls, bits: str, onset: Optional[int] = None, value: Optional[int] = None) -> "SigmaSequence":
        if (onset is None) != (value is None):
            raise DomainError("tail needs both onset and value")
        return cls(node(bits), None if onset is None else (onset, value))

    @property
    def eventually_constant(self) -> bool:
        return self.tail is not None

    @property
    def defined_through(self) -> Optional[int]:
        """Largest index with a defined value; ``None`` when infinite."""
        return None if self.tail else len(self.bits)

    def __getitem__(self, n: int) -> int:
        """``sigma[n]`` for 1-based ``n``."""
        if n < 1:
            raise IndexError("sigma is indexed from 1")
        if n <= len(self.bits):
            return self.bits[n - 1]
        if self.tail is not None:
            return self.tail[1]
        raise DomainError(f"sigma is only defined through index {len(self.bits)}")

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(1, n + 1))

    def stable_from(self) -> int:
        """Least ``N`` with ``sigma_n`` constant for all ``n > N``; needs a tail."""
        if self.tail is None:
            raise DomainError("sigma is not declared eventually constant")
        onset, value = self.tail
        n = onset - 1
        while n >= 1 and self[n] == value:
            n -= 1
        return n


def _require_defined(sigma: SigmaSequence, n: int) -> None:
    top = sigma.defined_through
    if top is not None and n > top:
        raise DomainError(f"sigma is only defined through index {top}, need {n}")


def branch_from_sigma(sigma: SigmaSequence, depth: int) -> list[TreeNode]:
    """The initial segments ``(s1), (s1, s2), ..., (s1..s_depth)``."""
    if depth < 1:
        raise DomainError("depth must be positive")
    _require_defined(sigma, depth)
    return [sigma.prefix(n) for n in range(1, depth + 1)]


def antichain_from_sigma(sigma: SigmaSequence, depth: int) -> Antichain:
    """``(s1..s_{n-1}, flip(s_n))`` for ``n = 1..depth``; member n leaves the branch at n."""
    if depth < 1:
        raise DomainError("depth must be positive")
    _require_defined(sigma, depth)
    return tuple(sigma.prefix(n - 1) + (flip(sigma[n]),) for n in range(1, depth + 1))


@lru_cache(maxsize=4096)
def pair_from_node(s: TreeNode) -> Pair:
    """Ones of the word on the A side, zeros on the B side."""
    if not s:
        raise DomainError("the root (empty word) has no pair")
    a = b = 0
    for k, bit in enumerate(s):
        if bit:
            a |= 1 << k
        else:
            b |= 1 << k
    return Pair(a, b)


def family_from_antichain(nodes: Sequence[TreeNode], ground_size: int) -> PairFamily:
    """One pair per node; linked whenever ``nodes`` is an antichain.

    A chain or other comparable input is accepted with a
    :class:`NotAnAntichainWarning`.
    """
    nodes = [tuple(s) for s in nodes]
    longest = max((len(s) for s in nodes), default=0)
    if ground_size < longest:
        raise DomainError(f"ground size {ground_size} is shorter than the longest node ({longest})")
    if len(set(nodes)) != len(nodes):
        raise EquilatError("duplicate node")
    if not is_antichain(nodes):
        warnings.warn("input nodes are not pairwise incomparable; the family may fail to be linked",
                      NotAnAntichainWarning, stacklevel=2)
    return PairFamily(ground_size, [pair_from_node(s) for s in nodes])


def count_antichains(depth: int) -> int:
    """Number of antichains (including the empty one) on levels 1..depth."""
    sub = 1  # subtree of height 0
    for _ in range(depth):
        sub = 1 + sub * sub
    return sub * sub if depth else 1


def _subtree_antichains(root: TreeNode, height: int) -> Iterator[Antichain]:
    if height == 0:
        yield ()
        return
    for left in _subtree_antichains(root + (0,), height - 1):
        for right in _subtree_antichains(root + (1,), height - 1):
            yield left + right
    yield (root,)


def iter_antichains(depth: int, enforce_caps: bool = True) -> Iterator[Antichain]:
    """Lazily yield every antichain of the tree restricted to levels 1..depth."""
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    if enforce_caps and depth > MAX_ITER_DEPTH:
        raise CapExceededError(f"antichain iteration is capped at depth {MAX_ITER_DEPTH}")
    if depth == 0:
        yield ()
        return
    for left in _subtree_antichains((0,), depth):
        for right in _subtree_antichains((1,), depth):
            yield left + right


def enumerate_antichains(depth: int, enforce_caps: bool = True) -> list[Antichain]:
    """Materialized :func:`iter_antichains`; depth 5 would hold ~2.1e11 antichains."""
    if enforce_caps and depth > MAX_ENUM_DEPTH:
        raise CapExceededError(
            f"materialized enumeration is capped at depth {MAX_ENUM_DEPTH} "
            f"({count_antichains(depth)} antichains at depth {depth}); use iter_antichains"
        )
    return list(iter_antichains(depth, enforce_caps=False))


def all_nodes(depth: int) -> list[TreeNode]:
    out = []
    for length in range(1, depth + 1):
        for m in range(1 << length):
            out.append(tuple((m >> (length - 1 - k)) & 1 for k in range(length)))
    return out


# ---------------------------------------------------------------------------
# point constructions


def _interior_list(t: Sequence[RationalLike], need: int, distinct: bool = False) -> list[Fraction]:
    vals = [as_rational(x) for x in t]
    if len(vals) < need:
        raise DomainError(f"need at least {need} interior values, got {len(vals)}")
    vals = vals[:need]
    for v in vals:
        if not 0 < v < 1:
            raise DomainError(f"interior value {v} is not in the open interval (0, 1)")
    if distinct and len(set(vals)) != len(vals):
        raise DomainError("interior values must be pairwise distinct")
    return vals


def default_interiors(count: int) -> list[Fraction]:
    return [Fraction(1, n + 2) for n in range(1, count + 1)]


def _departing_row(sigma: SigmaSequence, n: int, width: int, fill: Fraction) -> tuple:
    """``(s1..s_{n-1}, flip(s_n), fill, ..., fill)`` of length ``width``."""
    head = sigma.prefix(n - 1) + (flip(sigma[n]),)
    return tuple(Fraction(v) for v in head) + (fill,) * (width - n)


def departure_points(sigma: SigmaSequence, t: Optional[Sequence[RationalLike]], N: int, M: int) -> PointSet:
    """Rows ``p_1..p_N`` in dimension ``M`` followed by ``p_omega = (s1..s_M)``."""
    if not 1 <= N < M:
        raise DomainError(f"need 1 <= N < M, got N={N}, M={M}")
    _require_defined(sigma, M)
    ts = _interior_list(default_interiors(N) if t is None else t, N)
    rows = [_departing_row(sigma, n, M, ts[n - 1]) for n in range(1, N + 1)]
    rows.append(tuple(Fraction(v) for v in sigma.prefix(M)))
    return PointSet(M, rows)


def eventually_constant_points(sigma: SigmaSequence, t: Optional[Sequence[RationalLike]], M: int) -> PointSet:
    """Points ``f_1..f_M, f_omega`` on a model with ``M`` isolated points plus one remainder coordinate.

    ``f_n`` is constant ``t_n`` from coordinate ``n+1`` through the remainder;
    ``f_omega`` follows sigma and takes the tail value on the remainder.
    """
    if not sigma.eventually_constant:
        raise DomainError("sigma must be eventually constant")
    N = sigma.stable_from()
    if M < max(N, 1):
        raise DomainError(f"need M >= N = {N} (and M >= 1), got M={M}")
    ts = _interior_list(default_interiors(M) if t is None else t, M)
    width = M + 1
    rows = [_departing_row(sigma, n, width, ts[n - 1]) for n in range(1, M + 1)]
    i = sigma.tail[1]
    rows.append(tuple(Fraction(v) for v in sigma.prefix(M)) + (Fraction(i),))
    return PointSet(width, rows)


@dataclass(frozen=True)
class CompactModel:
    """Finite stand-in for a compact space: isolated points, an optional limit, the rest.

    Coordinates are ordered isolated points, then the limit, then the rest.
    """

    isolated: tuple[str, ...]
    limit: Optional[str] = None
    rest: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(self, "rest", tuple(self.rest))
        labels = self.labels
        if not labels:
            raise DomainError("model has no points")
        if len(set(labels)) != len(labels):
            raise DomainError("model labels must be distinct")

    @classmethod
    def sized(cls, isolated: int, limit: bool = False, rest: int = 0) -> "CompactModel":
        return cls(
            tuple(f"x{k}" for k in range(1, isolated + 1)),
            "inf" if limit else None,
            tuple(f"k{k}" for k in range(1, rest + 1)),
        )

    @property
    def labels(self) -> tuple[str, ...]:
        return self.isolated + ((self.limit,) if self.limit is not None else ()) + self.rest

    @property
    def dim(self) -> int:
        return len(self.labels)


def limit_model_points(sigma: SigmaSequence, t: Sequence[RationalLike], model: CompactModel, N: int) -> PointSet:
    """``f_1..f_N`` and ``f_omega`` over ``model``.

    ``f_n`` follows sigma on ``x_1..x_{n-1}``, flips at ``x_n`` and is ``t_n``
    everywhere else. ``f_omega`` follows sigma on every isolated point and is
    ``t_1`` on the limit and the rest. Interior values must be pairwise distinct.
    """
    M = len(model.isolated)
    if not 1 <= N <= M:
        raise DomainError(f"need 1 <= N <= {M} isolated points, got N={N}")
    if sigma.eventually_constant:
        raise DomainError("sigma must not be declared eventually constant")
    _require_defined(sigma, M)
    if M >= 2 and len(set(sigma.prefix(M))) < 2:
        raise DomainError("sigma is constant on the isolated points")
    ts = _interior_list(t, N, distinct=True)
    width = model.dim
    rows = [_departing_row(sigma, n, width, ts[n - 1]) for n in range(1, N + 1)]
    rows.append(tuple(Fraction(v) for v in sigma.prefix(M)) + (ts[0],) * (width - M))
    return PointSet(width, rows)


def half_block_points(sigma: SigmaSequence, K_size: int, M: int) -> PointSet:
    """Points over (1..M, infinity, K-block) with interior value 1/2.

    ``f_omega`` follows sigma on ``1..M``, takes the tail value at infinity
    and 1/2 on the K-block; every point is 1/2 on the K-block.
    """
    if not sigma.eventually_constant:
        raise DomainError("sigma must be eventually constant")
    if K_size < 1:
        raise DomainError("K-block needs at least one point")
    N = sigma.stable_from()
    if M < max(N, 1):
        raise DomainError(f"need M >= N = {N} (and M >= 1), got M={M}")
    half = Fraction(1, 2)
    width = M + 1 + K_size
    rows = [_departing_row(sigma, n, width, half) for n in range(1, M + 1)]
    rows.append(
        tuple(Fraction(v) for v in sigma.prefix(M)) + (Fraction(sigma.tail[1]),) + (half,) * K_size
    )
    return PointSet(width, rows)
