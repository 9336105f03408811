"""Search for the least size of a maximal 1-equilateral set in d-dimensional sup-norm space."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CapExceededError, DomainError
from .families import PairFamily, iter_candidate_pairs, iter_linked_families
from .maximality import find_extension, is_maximal_equilateral
from .supnorm import PointSet, realize_pair

INTERIOR_SWEEP = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4))
MAX_SEARCH_DIM = 4


@dataclass
class SizeRecord:
    size: int
    skeletons: int = 0
    realizations: int = 0
    trials: int = 0
    failures: int = 0


@dataclass
class MSearchReport:
    dim: int
    k_max: int
    seed: int
    first_maximal_size: Optional[int] = None
    certificate: Optional[PointSet] = None
    certificate_family: Optional[PairFamily] = None
    sizes: list[SizeRecord] = field(default_factory=list)

    @property
    def lower_bound_failures(self) -> int:
        return sum(r.failures for r in self.sizes if self.first_maximal_size is None
                   or r.size < self.first_maximal_size)

    @property
    def claim(self) -> str:
        if self.first_maximal_size is None:
            return f"not found <= {self.k_max}"
        if self.lower_bound_failures:
            return "certificate found; smaller sizes have non-extendable samples"
        return "certified upper bound + sampled lower-bound evidence"

    @property
    def m(self) -> Optional[int]:
        """The claimed value, only when no smaller sample failed to extend."""
        if self.first_maximal_size is None or self.lower_bound_failures:
            return None
        return self.first_maximal_size


def realizations(F: PairFamily):
    """Point sets realizing a linked skeleton, in a fixed order.

    For each interior value of the sweep: first the plain realization (0 on A,
    1 on B, interior elsewhere), then the anchored one.
    """
    n = F.ground_size
    seen = set()
    for t in INTERIOR_SWEEP:
        for anchored in (False, True):
            pts = tuple(realize_pair(p, n, t, anchored) for p in F)
            if pts in seen:
                continue
            seen.add(pts)
            yield PointSet(n, pts)


def random_linked_family(n: int, k: int, rng: random.Random, attempts: int = 1000) -> PairFamily:
    cands = list(iter_candidate_pairs(n))
    for _ in range(attempts):
        rng.shuffle(cands)
        chosen = []
        for p in cands:
            if all(p.links(q) for q in chosen):
                chosen.append(p)
                if len(chosen) == k:
                    return PairFamily(n, chosen)
    raise DomainError(f"no linked family of size {k} found on {n} elements")


def random_interior(rng: random.Random) -> Fraction:
    q = rng.randint(2, 12)
    return Fraction(rng.randint(1, q - 1), q)


def random_equilateral_set(n: int, k: int, rng: random.Random) -> PointSet:
    """0 on A, 1 on B and independent random interior values elsewhere."""
    F = random_linked_family(n, k, rng)
    pts = []
    for p in F:
        pts.append(tuple(
            Fraction(0) if p.a >> i & 1 else Fraction(1) if p.b >> i & 1 else random_interior(rng)
            for i in range(n)
        ))
    return PointSet(n, pts)


def m_search(dim: int, k_max: int, trials: int, seed: int, enforce_caps: bool = True) -> MSearchReport:
    if dim < 1 or k_max < 1 or trials < 1:
        raise DomainError("dim, k_max and trials must be positive")
    if enforce_caps and (dim > MAX_SEARCH_DIM or k_max > dim + 2):
        raise CapExceededError(f"m_search is capped at d <= {MAX_SEARCH_DIM}, k_max <= d + 2")
    report = MSearchReport(dim, k_max, seed)
    rng = random.Random(seed)
    for k in range(1, k_max + 1):
        rec = SizeRecord(k)
        report.sizes.append(rec)
        for F in iter_linked_families(dim, k):
            rec.skeletons += 1
            for S in realizations(F):
                rec.realizations += 1
                if is_maximal_equilateral(S, enforce_caps):
                    report.first_maximal_size = k
                    report.certificate = S
                    report.certificate_family = F
                    return report
        for _ in range(trials):
            S = random_equilateral_set(dim, k, rng)
            rec.trials += 1
            if find_extension(S, enforce_caps) is None:
                rec.failures += 1
    return report
