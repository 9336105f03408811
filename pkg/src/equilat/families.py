"""Families of disjoint pairs over a finite ground set.

Subsets of the ground set ``{0, ..., n-1}`` are stored as integer bitmasks.
A family is *linked* when every pair has ``A | B`` nonempty and any two
distinct pairs cross-intersect (``A_i & B_j`` or ``A_j & B_i`` nonempty).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import CapExceededError, DomainError, EquilatError, NotLinkedError

MAX_BRUTE_FORCE_GROUND = 20


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 0:
            raise DomainError(f"negative ground element {e}")
        mask |= 1 << e
    return mask


@lru_cache(maxsize=1 << 16)
def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, order=True)
class Pair:
    """A pair ``(A, B)`` of disjoint subsets, held as bitmasks ``a`` and ``b``.

    Ordering is ``(a, b)`` ascending, which is the canonical candidate order
    used by :func:`find_family_extension`.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError("pair masks must be nonnegative")
        if self.a & self.b:
            raise EquilatError(
                f"pair sides intersect: A={sorted(from_mask(self.a))} B={sorted(from_mask(self.b))}"
            )

    @classmethod
    def of(cls, A: Iterable[int], B: Iterable[int]) -> "Pair":
        return cls(to_mask(A), to_mask(B))

    @property
    def A(self) -> frozenset[int]:
        return from_mask(self.a)

    @property
    def B(self) -> frozenset[int]:
        return from_mask(self.b)

    @property
    def support(self) -> int:
        return self.a | self.b

    def links(self, other: "Pair") -> bool:
        return bool(self.a & other.b) or bool(other.a & self.b)

    def mirrored(self) -> "Pair":
        return Pair(self.b, self.a)

    def __repr__(self):
        return f"Pair({sorted(self.A)}, {sorted(self.B)})"


class PairFamily:
    """An ordered family of pairs over the ground set ``range(ground_size)``.

    A family is a set, so duplicate pairs are rejected unless ``indexed=True``.
    Indexed families model ``{(A_f, B_f) : f in S}`` where two members of ``S``
    may produce the same pair; such a family is never linked.

    Equality ignores pair order.
    """

    __slots__ = ("ground_size", "pairs", "indexed")

    def __init__(self, ground_size: int, pairs: Iterable[Pair] = (), indexed: bool = False):
        if ground_size < 1:
            raise DomainError("ground set must have at least one element")
        pairs = tuple(pairs)
        limit = full_mask(ground_size)
        for p in pairs:
            if not isinstance(p, Pair):
                raise TypeError(f"expected Pair, got {type(p).__name__}")
            if p.support & ~limit:
                raise DomainError(f"{p!r} uses elements outside a ground set of size {ground_size}")
        if not indexed and len(set(pairs)) != len(pairs):
            raise EquilatError("duplicate pair in family")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "indexed", indexed)

    def __setattr__(self, name, value):
        raise AttributeError("PairFamily is immutable")

    @classmethod
    def from_sets(cls, ground_size: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "PairFamily":
        return cls(ground_size, [Pair.of(A, B) for A, B in pairs])

    @property
    def full(self) -> int:
        return full_mask(self.ground_size)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __eq__(self, other):
        if not isinstance(other, PairFamily):
            return NotImplemented
        return self.ground_size == other.ground_size and Counter(self.pairs) == Counter(other.pairs)

    def __hash__(self):
        return hash((self.ground_size, frozenset(Counter(self.pairs).items())))

    def __repr__(self):
        body = ", ".join(repr(p) for p in self.pairs)
        return f"PairFamily(n={self.ground_size}, [{body}])"

    def with_pair(self, pair: Pair) -> "PairFamily":
        return PairFamily(self.ground_size, self.pairs + (pair,), indexed=self.indexed)

    def mirrored(self) -> "PairFamily":
        """Swap the two sides of every pair. Linkedness is invariant under this."""
        return PairFamily(self.ground_size, [p.mirrored() for p in self.pairs], indexed=self.indexed)

    def restricted(self, ground_size: int) -> "PairFamily":
        """Intersect every side with ``range(ground_size)``; result is indexed."""
        m = full_mask(ground_size)
        return PairFamily(ground_size, [Pair(p.a & m, p.b & m) for p in self.pairs], indexed=True)


def is_linked(F: PairFamily) -> bool:
    pairs = F.pairs
    for i, p in enumerate(pairs):
        if not p.support:
            return False
        for q in pairs[i + 1:]:
            if not (p.a & q.b or q.a & p.b):
                return False
    return True


def is_nonempty_linked(F: PairFamily) -> bool:
    return all(p.a and p.b for p in F) and is_linked(F)


def _require_linked(F: PairFamily) -> None:
    if not is_linked(F):
        raise NotLinkedError("family is not linked")


def family_facts_check(F: PairFamily) -> bool:
    """Check the elementary facts every linked family satisfies.

    All A sides are distinct, all B sides are distinct, and at most one pair
    has an empty A (likewise for B).
    """
    _require_linked(F)
    As = [p.a for p in F]
    Bs = [p.b for p in F]
    return (
        len(set(As)) == len(As)
        and len(set(Bs)) == len(Bs)
        and As.count(0) <= 1
        and Bs.count(0) <= 1
    )


def augment_with_extremes(F: PairFamily) -> PairFamily:
    """Append ``(ground, {})`` and ``({}, ground)`` to a nonempty-linked family."""
    if not is_nonempty_linked(F):
        raise NotLinkedError("augment_with_extremes needs a linked family of nonempty pairs")
    full = F.full
    return PairFamily(F.ground_size, F.pairs + (Pair(full, 0), Pair(0, full)))


def iter_candidate_pairs(n: int) -> Iterator[Pair]:
    """All disjoint pairs with nonempty union, in (A mask, B mask) ascending order."""
    full = full_mask(n)
    for a in range(full + 1):
        comp = full & ~a
        # submasks of comp in ascending order
        b = 0
        while True:
            if a or b:
                yield Pair(a, b)
            if b == comp:
                break
            b = (b - comp) & comp


def find_family_extension(F: PairFamily, enforce_caps: bool = True) -> Optional[Pair]:
    """Least pair that can be appended to the linked family ``F`` keeping it linked.

    Candidates are scanned in ``(A, B)`` bitmask order; ``None`` means ``F`` is
    maximal.
    """
    _require_linked(F)
    if enforce_caps and F.ground_size > MAX_BRUTE_FORCE_GROUND:
        raise CapExceededError(
            f"brute-force extension is capped at ground size {MAX_BRUTE_FORCE_GROUND}"
        )
    members = set(F.pairs)
    for cand in iter_candidate_pairs(F.ground_size):
        if cand in members:
            continue
        if all(cand.a & q.b or q.a & cand.b for q in F.pairs):
            return cand
    return None


def is_maximal_linked(F: PairFamily, enforce_caps: bool = True) -> bool:
    return find_family_extension(F, enforce_caps=enforce_caps) is None


@dataclass(frozen=True)
class WeakSeparationWitness:
    """Items ``(F_i, V_i)`` with ``F_i`` nonempty and ``F_i`` a subset of ``V_i``."""

    items: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __post_init__(self):
        items = tuple((frozenset(f), frozenset(v)) for f, v in self.items)
        for f, v in items:
            if not f:
                raise EquilatError("witness item has an empty F")
            if not f <= v:
                raise EquilatError(f"witness item F={sorted(f)} is not contained in V={sorted(v)}")
        object.__setattr__(self, "items", items)

    def __len__(self):
        return len(self.items)


def is_weakly_separated(W: WeakSeparationWitness) -> bool:
    items = W.items
    for i, (fi, vi) in enumerate(items):
        for fj, vj in items[i + 1:]:
            if fi <= vj and fj <= vi:
                return False
    return True


def weak_separation_from_family(F: PairFamily) -> WeakSeparationWitness:
    """Map each pair ``(A, B)`` to the item ``(B, ground - A)``.

    Accepts any linked family whose B sides are all nonempty; an empty A side
    simply yields ``V = ground``.
    """
    if any(not p.b for p in F):
        raise EquilatError("every pair needs a nonempty B side")
    _require_linked(F)
    full = F.full
    return WeakSeparationWitness(tuple((p.B, from_mask(full & ~p.a)) for p in F))


def family_from_weak_separation(W: WeakSeparationWitness, ground_size: int) -> PairFamily:
    """Inverse of :func:`weak_separation_from_family`: item ``(F, V)`` becomes ``(ground - V, F)``."""
    full = full_mask(ground_size)
    pairs = []
    for f, v in W.items:
        fm, vm = to_mask(f), to_mask(v)
        if (fm | vm) & ~full:
            raise DomainError(f"witness uses elements outside a ground set of size {ground_size}")
        pairs.append(Pair(full & ~vm, fm))
    if not is_weakly_separated(W):
        raise NotLinkedError("witness is not weakly separated")
    return PairFamily(ground_size, pairs)


def iter_linked_families(n: int, size: Optional[int] = None, nonempty: bool = False) -> Iterator[PairFamily]:
    """Every linked family on ``range(n)``, optionally of a fixed size.

    Families come out in lexicographic order of their member indices in the
    canonical candidate order; each family is listed once.
    """
    if n > 6:
        raise CapExceededError(f"linked-family enumeration is capped at n <= 6 (got {n})")
    cands = [p for p in iter_candidate_pairs(n) if not nonempty or (p.a and p.b)]
    m = len(cands)
    # adj[i]: bitset of candidates j > i that link with candidate i
    adj = []
    for i, p in enumerate(cands):
        bits = 0
        for j in range(i + 1, m):
            if p.links(cands[j]):
                bits |= 1 << j
        adj.append(bits)

    chosen: list[Pair] = []

    def rec(allowed: int) -> Iterator[PairFamily]:
        if size is None or len(chosen) == size:
            yield PairFamily(n, chosen)
            if size is not None:
                return
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            chosen.append(cands[i])
            yield from rec(allowed & adj[i])
            chosen.pop()

    yield from rec((1 << m) - 1)
