import pytest

from oracles import minimal_hitting_sets
from posetblockers.antichains import enumerate_antichains
from posetblockers.blockers import blocker
from posetblockers.clutter import (
    Clutter,
    antichain_to_clutter,
    boolean_lattice,
    clutter_blocker,
    clutter_to_antichain,
    family_blocker,
    format_clutter,
    is_blocking_set,
    minimal_members,
    parse_clutter,
)
from posetblockers.errors import HypothesisViolated, OutOfEnvelope, ParseError
from posetblockers.generate import random_clutter
from posetblockers.verify import all_clutters

E = frozenset()


def C(n, *sets):
    return Clutter(n, [frozenset(s) for s in sets])


def test_is_blocking_set():
    assert is_blocking_set({1, 2, 3}, [{1}, {2, 3}])
    assert is_blocking_set({1, 2}, [{1}, {2}])
    assert not is_blocking_set({1}, [{1}, {2}])


@pytest.mark.parametrize("family", [[], [set()], [{1}, set()]])
def test_is_blocking_set_hypothesis(family):
    with pytest.raises(HypothesisViolated):
        is_blocking_set({1}, family)


def test_trivial_clutters():
    assert clutter_blocker(C(2)) == C(2, E)
    assert clutter_blocker(C(2, E)) == C(2)


def test_small_blockers():
    assert clutter_blocker(C(2, {1}, {2})) == C(2, {1, 2})
    assert clutter_blocker(C(2, {1, 2})) == C(2, {1}, {2})


def test_clutter_rejects_nested_members():
    with pytest.raises(ValueError):
        C(2, {1}, {1, 2})
    with pytest.raises(ValueError):
        C(2, {3})


def test_canonical_order():
    assert C(3, {2, 3}, {1}).sets == (frozenset({1}), frozenset({2, 3}))


def test_all_clutters_counts():
    # Dedekind numbers 3, 6, 20 for ground sets of size 1, 2, 3
    assert [len(all_clutters(n)) for n in (1, 2, 3)] == [3, 6, 20]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_blocker_matches_oracle_and_is_involutive(n):
    for G in all_clutters(n):
        B = clutter_blocker(G)
        if G.sets and E not in G.sets:
            assert set(B.sets) == minimal_hitting_sets(range(1, n + 1), G.sets)
        assert clutter_blocker(B) == G


def test_blocker_involutive_on_sampled_n4():
    for seed in range(100):
        G = random_clutter(4, seed)
        assert clutter_blocker(clutter_blocker(G)) == G


def test_blocker_of_family_equals_blocker_of_reduction():
    fam = [{1}, {1, 2}, {2, 3}, {1, 2, 3}]
    assert family_blocker(range(1, 4), fam) == family_blocker(range(1, 4), minimal_members(fam))


def test_boolean_lattice():
    assert boolean_lattice(1).n == 2
    b2 = boolean_lattice(2)
    assert b2.n == 4 and len(b2.atoms) == 2
    b3 = boolean_lattice(3)
    assert b3.n == 8 and len(b3.atoms) == 3
    assert len(enumerate_antichains(b3)) == 20
    with pytest.raises(OutOfEnvelope):
        boolean_lattice(5)


def test_bridge_examples():
    L = boolean_lattice(2)
    assert clutter_to_antichain(C(2)) == ()
    assert clutter_to_antichain(C(2, E)) == (L.zero,)
    assert clutter_to_antichain(C(2, {1}, {2})) == tuple(sorted(L.atoms))
    assert antichain_to_clutter(2, tuple(sorted(L.atoms))) == C(2, {1}, {2})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bridge_commutes_with_blocker(n):
    L = boolean_lattice(n)
    for G in all_clutters(n):
        assert clutter_to_antichain(clutter_blocker(G)) == blocker(L, clutter_to_antichain(G))
        assert antichain_to_clutter(n, clutter_to_antichain(G)) == G


def test_random_clutter_on_one_point():
    for seed in range(20):
        assert random_clutter(1, seed) == C(1, {1})


@pytest.mark.parametrize("text", ["-", "0", "3;1,2", "1;2;3"])
def test_serialization_round_trip(text):
    assert format_clutter(parse_clutter(text, 3)) == text


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_clutter("1,x", 3)
    with pytest.raises(ParseError):
        parse_clutter("1;1,2", 3)
