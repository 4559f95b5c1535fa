import random

import pytest

from evpkit.core.exceptions import DimensionMismatch, IndexOutOfRange
from evpkit.relations import FiniteRelation, find_maximal, is_maximal, transitive_closure


def test_closure_of_a_chain() -> None:
    s = FiniteRelation.from_pairs(3, [(0, 1), (1, 2)])
    closure = transitive_closure(s)
    assert closure.pairs() == {(0, 1), (1, 2), (0, 2)}
    assert not closure.holds(0, 0)


def test_cycle_makes_points_self_related() -> None:
    s = FiniteRelation.from_pairs(3, [(0, 1), (1, 0), (1, 2)])
    closure = transitive_closure(s)
    assert closure.holds(0, 0)
    assert closure.holds(1, 1)
    assert not closure.holds(2, 2)


def test_maximal_along_a_chain() -> None:
    s = FiniteRelation.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    assert find_maximal(s, 0) == 3
    assert find_maximal(s, 3) == 3
    assert is_maximal(transitive_closure(s), 3)
    assert not is_maximal(transitive_closure(s), 1)


def test_cycle_members_are_maximal() -> None:
    s = FiniteRelation.from_pairs(2, [(0, 1), (1, 0)])
    assert is_maximal(transitive_closure(s), 0)
    assert find_maximal(s, 0) == 0


def test_empty_relation_keeps_the_start() -> None:
    s = FiniteRelation.from_pairs(3, [])
    assert find_maximal(s, 2) == 2


def test_find_maximal_on_random_relations() -> None:
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(1, 8)
        pairs = [(i, j) for i in range(n) for j in range(n) if rng.random() < 0.25]
        s = FiniteRelation.from_pairs(n, pairs)
        closure = transitive_closure(s)
        for start in range(n):
            x = find_maximal(s, start)
            assert is_maximal(closure, x)
            assert x == start or closure.holds(start, x)


def test_bad_relations_are_rejected() -> None:
    with pytest.raises(IndexOutOfRange):
        FiniteRelation.from_pairs(2, [(0, 2)])
    with pytest.raises(DimensionMismatch):
        FiniteRelation(((True, False),))
    with pytest.raises(IndexOutOfRange):
        find_maximal(FiniteRelation.from_pairs(2, []), 5)


def _saturate(s: FiniteRelation) -> set[tuple[int, int]]:
    pairs = s.pairs()
    while True:
        extra = {(i, k) for i, j in pairs for j2, k in pairs if j == j2} - pairs
        if not extra:
            return pairs
        pairs |= extra


def test_closure_matches_saturation_and_is_a_closure_operator() -> None:
    rng = random.Random(2)
    for _ in range(40):
        n = 6
        pairs = [(i, j) for i in range(n) for j in range(n) if rng.random() < 0.2]
        s = FiniteRelation.from_pairs(n, pairs)
        closure = transitive_closure(s)
        assert closure.pairs() == _saturate(s)
        assert s.pairs() <= closure.pairs()
        assert transitive_closure(closure) == closure

        larger = FiniteRelation.from_pairs(n, pairs + [(rng.randrange(n), rng.randrange(n))])
        assert closure.pairs() <= transitive_closure(larger).pairs()
