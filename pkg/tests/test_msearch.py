import random
from fractions import Fraction as Q

import pytest

from conftest import fam
from equilat.errors import CapExceededError, DomainError
from equilat.families import is_linked
from equilat.maximality import grid_oracle_extension, is_maximal_equilateral
from equilat.msearch import (
    INTERIOR_SWEEP,
    m_search,
    random_equilateral_set,
    random_linked_family,
    realizations,
)
from equilat.supnorm import is_equilateral


def test_sweep_is_fixed():
    assert INTERIOR_SWEEP == (Q(1, 2), Q(1, 3), Q(2, 3), Q(1, 4), Q(3, 4))


def test_realizations_plain_then_anchored():
    got = [list(S) for S in realizations(fam(2, (set(), {0})))]
    assert got[:2] == [[(1, Q(1, 2))], [(1, 0)]]
    assert all(is_equilateral(S) for S in realizations(fam(3, ({0}, {1}), ({1}, {2}), ({2}, {0}))))


def test_random_helpers():
    rng = random.Random(3)
    for _ in range(50):
        F = random_linked_family(3, 3, rng)
        assert len(F) == 3 and is_linked(F)
        S = random_equilateral_set(3, 2, rng)
        assert len(S) == 2 and is_equilateral(S)
    with pytest.raises(DomainError):
        random_linked_family(1, 3, rng, attempts=5)


def test_d1():
    R = m_search(1, 3, 50, 0)
    assert R.first_maximal_size == 2 and R.m == 2
    assert set(R.certificate) == {(Q(0),), (Q(1),)}
    assert R.claim == "certified upper bound + sampled lower-bound evidence"


def test_d2_certificate():
    R = m_search(2, 4, 100, 1)
    assert R.m == 3
    assert is_maximal_equilateral(R.certificate)
    assert grid_oracle_extension(R.certificate) is None
    assert [r.failures for r in R.sizes[:2]] == [0, 0]


def test_not_found_and_caps():
    R = m_search(2, 2, 10, 0)
    assert R.first_maximal_size is None and R.m is None
    assert R.claim == "not found <= 2"
    with pytest.raises(CapExceededError):
        m_search(5, 3, 1, 0)
    with pytest.raises(CapExceededError):
        m_search(2, 5, 1, 0)
    with pytest.raises(DomainError):
        m_search(0, 1, 1, 0)


def test_deterministic():
    a, b = m_search(2, 4, 30, 7), m_search(2, 4, 30, 7)
    assert a.certificate == b.certificate and a.sizes == b.sizes
