import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import fam
from equilat.errors import CapExceededError, DomainError, EquilatError, NotLinkedError
from equilat.families import (
    Pair,
    PairFamily,
    WeakSeparationWitness,
    augment_with_extremes,
    family_facts_check,
    family_from_weak_separation,
    find_family_extension,
    from_mask,
    is_linked,
    is_maximal_linked,
    is_nonempty_linked,
    is_weakly_separated,
    iter_candidate_pairs,
    iter_linked_families,
    weak_separation_from_family,
)


def as_sets(F):
    return [(set(p.A), set(p.B)) for p in F]


class TestTypes:
    def test_pair_rejects_overlap(self):
        with pytest.raises(EquilatError):
            Pair.of({0, 1}, {1})

    def test_duplicate_pairs_rejected(self):
        with pytest.raises(EquilatError):
            fam(2, ({0}, {1}), ({0}, {1}))

    def test_indexed_family_keeps_duplicates(self):
        F = PairFamily(2, [Pair(1, 2), Pair(1, 2)], indexed=True)
        assert len(F) == 2
        assert not is_linked(F)

    def test_elements_outside_ground(self):
        with pytest.raises(DomainError):
            fam(2, ({2}, {0}))

    def test_equality_ignores_order(self, triangle):
        assert triangle == fam(3, ({2}, {0}), ({0}, {1}), ({1}, {2}))
        assert hash(triangle) == hash(fam(3, ({2}, {0}), ({0}, {1}), ({1}, {2})))

    def test_mask_roundtrip(self):
        assert from_mask(0b1011) == {0, 1, 3}
        assert Pair.of({0, 3}, {1}).A == {0, 3}


class TestIsLinked:
    def test_triangle(self, triangle):
        assert is_linked(triangle)
        assert is_nonempty_linked(triangle)

    def test_disjoint_supports(self):
        assert not is_linked(fam(4, ({0}, {1}), ({2}, {3})))

    def test_complement_family(self, complement2):
        assert is_linked(complement2)
        assert not is_nonempty_linked(complement2)

    def test_empty_pair_breaks_linkedness(self):
        assert not is_linked(fam(2, (set(), set())))

    def test_full_side_not_nonempty(self):
        assert not is_nonempty_linked(fam(3, (set(), {0, 1, 2})))

    def test_singleton(self):
        assert is_nonempty_linked(fam(2, ({0}, {1})))

    def test_empty_family(self):
        assert is_linked(PairFamily(3))

    @given(st.lists(st.tuples(st.lists(st.integers(0, 3)), st.lists(st.integers(0, 3))), max_size=6),
           st.randoms(use_true_random=False))
    def test_matches_definition_and_order_invariant(self, raw, rnd):
        pairs = []
        for A, B in raw:
            A, B = set(A), set(B) - set(A)
            if (A, B) not in pairs:
                pairs.append((A, B))
        F = PairFamily.from_sets(4, pairs)
        assert is_linked(F) == oracles.linked(pairs)
        shuffled = list(F.pairs)
        rnd.shuffle(shuffled)
        assert is_linked(PairFamily(4, shuffled)) == is_linked(F)


class TestFacts:
    def test_triangle(self, triangle):
        assert family_facts_check(triangle)

    def test_complement(self, complement2):
        assert family_facts_check(complement2)
        assert [p.a for p in complement2].count(0) == 1
        assert [p.b for p in complement2].count(0) == 1

    def test_rejects_unlinked(self):
        with pytest.raises(NotLinkedError):
            family_facts_check(fam(4, ({0}, {1}), ({2}, {3})))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_every_linked_family_small(self, n):
        count = 0
        for F in iter_linked_families(n):
            assert family_facts_check(F)
            count += 1
        assert count == {1: 4, 2: 34, 3: 2088}[n]

    def test_n4_by_pairwise_reduction(self):
        # Each fact is a condition on two members at a time, and every two
        # members of a linked family form a linked family, so checking all
        # linked two-member families on n = 4 covers every linked family.
        cands = list(iter_candidate_pairs(4))
        for p, q in combinations(cands, 2):
            F = PairFamily(4, [p, q])
            if is_linked(F):
                assert family_facts_check(F)
        assert all(family_facts_check(PairFamily(4, [p])) for p in cands)

    @pytest.mark.slow
    def test_every_linked_family_n4(self):
        assert all(family_facts_check(F) for F in iter_linked_families(4))


class TestEnumeration:
    def test_candidate_order_and_count(self):
        for n in range(1, 5):
            got = [(set(p.A), set(p.B)) for p in iter_candidate_pairs(n)]
            assert got == oracles.all_candidates(n)
            assert len(got) == 3 ** n - 1

    def test_linked_families_match_bruteforce_n2(self):
        cands = oracles.all_candidates(2)
        expected = set()
        for r in range(len(cands) + 1):
            for combo in combinations(range(len(cands)), r):
                chosen = [cands[i] for i in combo]
                if oracles.linked(chosen):
                    expected.add(frozenset((frozenset(A), frozenset(B)) for A, B in chosen))
        got = {frozenset((p.A, p.B) for p in F) for F in iter_linked_families(2)}
        assert got == expected

    def test_fixed_size(self):
        assert all(len(F) == 3 for F in iter_linked_families(3, 3))
        assert all(is_nonempty_linked(F) for F in iter_linked_families(3, nonempty=True))


class TestAugment:
    def test_triangle(self, triangle):
        G = augment_with_extremes(triangle)
        assert len(G) == 5 and is_linked(G)

    def test_empty_family(self):
        G = augment_with_extremes(PairFamily(3))
        assert G == fam(3, ({0, 1, 2}, set()), (set(), {0, 1, 2}))
        assert is_linked(G)

    def test_singleton(self):
        G = augment_with_extremes(fam(2, ({0}, {1})))
        assert len(G) == 3 and oracles.linked(as_sets(G))

    def test_rejects_one_sided(self, complement2):
        with pytest.raises(NotLinkedError):
            augment_with_extremes(complement2)

    def test_preserves_linkedness_n3(self):
        for F in iter_linked_families(3, nonempty=True):
            G = augment_with_extremes(F)
            assert len(G) == len(F) + 2 and is_linked(G)


class TestExtension:
    def test_triangle(self, triangle):
        assert find_family_extension(triangle) == Pair.of(set(), {0, 1, 2})
        assert not is_maximal_linked(triangle)

    def test_complement_family_is_maximal(self, complement2):
        assert find_family_extension(complement2) is None
        assert is_maximal_linked(complement2)

    def test_empty_family(self):
        assert find_family_extension(PairFamily(1)) == Pair.of(set(), {0})
        assert not is_maximal_linked(PairFamily(1))

    def test_rejects_unlinked(self):
        with pytest.raises(NotLinkedError):
            find_family_extension(fam(4, ({0}, {1}), ({2}, {3})))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            find_family_extension(PairFamily(21))

    def test_agrees_with_bruteforce(self):
        rng = random.Random(11)
        for n in (1, 2, 3):
            families = list(iter_linked_families(n))
            for F in rng.sample(families, min(150, len(families))):
                got = find_family_extension(F)
                want = oracles.least_extension(n, as_sets(F))
                assert (None if got is None else (set(got.A), set(got.B))) == want
                if got is not None:
                    assert is_linked(F.with_pair(got))

    def test_maximal_means_no_candidate_fits(self):
        for F in iter_linked_families(2):
            if is_maximal_linked(F):
                for A, B in oracles.all_candidates(2):
                    assert (A, B) in as_sets(F) or not oracles.linked(as_sets(F) + [(A, B)])


class TestWeakSeparation:
    def test_triangle_witness(self, triangle):
        W = weak_separation_from_family(triangle)
        assert W.items == (
            (frozenset({1}), frozenset({1, 2})),
            (frozenset({2}), frozenset({0, 2})),
            (frozenset({0}), frozenset({0, 1})),
        )
        assert is_weakly_separated(W)
        assert family_from_weak_separation(W, 3) == triangle

    def test_singleton(self):
        W = weak_separation_from_family(fam(2, ({0}, {1})))
        assert W.items == ((frozenset({1}), frozenset({1})),)

    def test_rejects_empty_b(self):
        with pytest.raises(EquilatError):
            weak_separation_from_family(fam(2, ({0}, set())))

    def test_single_item_family(self):
        W = WeakSeparationWitness((({0}, {0}),))
        assert is_weakly_separated(W)
        assert family_from_weak_separation(W, 3) == fam(3, ({1, 2}, {0}))

    def test_not_weakly_separated(self):
        W = WeakSeparationWitness((({0}, {0, 1}), ({1}, {0, 1})))
        assert not is_weakly_separated(W)
        with pytest.raises(NotLinkedError):
            family_from_weak_separation(W, 2)

    def test_f_not_inside_v(self):
        with pytest.raises(EquilatError):
            WeakSeparationWitness((({0, 1}, {0}),))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_roundtrip_exhaustive_small(self, n):
        for F in iter_linked_families(n, nonempty=True):
            W = weak_separation_from_family(F)
            assert is_weakly_separated(W)
            assert family_from_weak_separation(W, n) == F

    @settings(max_examples=200)
    @given(st.data())
    def test_weak_separation_equals_linkedness(self, data):
        # for witnesses coming from arbitrary pairs with nonempty B
        n = 4
        raw = data.draw(st.lists(st.tuples(st.sets(st.integers(0, n - 1)),
                                           st.sets(st.integers(0, n - 1), min_size=1)),
                                 max_size=5))
        pairs = []
        for A, B in raw:
            A = A - B
            if (A, B) not in pairs:
                pairs.append((A, B))
        full = set(range(n))
        W = WeakSeparationWitness(tuple((B, full - A) for A, B in pairs))
        assert is_weakly_separated(W) == oracles.linked(pairs)
