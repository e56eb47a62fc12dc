import pytest

from helpers import ac
from oracles import antichains as brute_antichains
from oracles import matrix_of, minimal, up_set
from posetblockers.antichains import (
    antichain_join,
    antichain_leq,
    antichain_meet,
    enumerate_antichains,
    ideal_order_leq,
)
from posetblockers.clutter import boolean_lattice
from posetblockers.generate import catalog


def test_leq_examples(n5, b2):
    for A in enumerate_antichains(n5):
        assert antichain_leq(n5, (), A)
        assert antichain_leq(n5, A, (n5.zero,))
    assert antichain_leq(n5, ac(n5, "1"), ac(n5, "z"))
    assert not antichain_leq(n5, ac(n5, "z"), ac(n5, "1"))


def test_join_examples(n5):
    z = ac(n5, "z")
    assert antichain_join(n5, z, ()) == z
    assert antichain_join(n5, z, ac(n5, "y")) == ac(n5, "y,z")
    assert antichain_join(n5, ac(n5, "x"), z) == ac(n5, "x")


def test_meet_examples(n5, b2):
    for A in enumerate_antichains(n5):
        assert antichain_meet(n5, A, (n5.zero,)) == A
    assert antichain_meet(n5, ac(n5, "z"), ac(n5, "y")) == ac(n5, "1")
    assert antichain_meet(b2, ac(b2, "a"), ac(b2, "b")) == ac(b2, "1")


def test_enumeration_examples(c2, b2, n5):
    assert enumerate_antichains(c2) == [(), (0,), (1,)]
    named = [",".join(b2.names[i] for i in A) for A in enumerate_antichains(b2)]
    assert named == ["", "0", "a", "b", "1", "a,b"]
    named = [",".join(n5.names[i] for i in A) for A in enumerate_antichains(n5)]
    assert named == ["", "0", "x", "y", "z", "1", "x,y", "y,z"]


def test_boolean_three_has_twenty_antichains():
    assert len(enumerate_antichains(boolean_lattice(3))) == 20


@pytest.mark.parametrize("p", catalog(), ids=lambda p: p.name)
def test_enumeration_matches_brute_force(p):
    got = enumerate_antichains(p)
    expected = brute_antichains(matrix_of(p))
    assert sorted(got) == sorted(expected)
    assert len(set(got)) == len(got)
    assert got == sorted(got, key=lambda A: (len(A), A))


@pytest.mark.parametrize("p", catalog(), ids=lambda p: p.name)
def test_operations_match_oracle(p):
    m = matrix_of(p)
    ants = enumerate_antichains(p)
    for A in ants:
        for B in ants:
            fa, fb = up_set(m, A), up_set(m, B)
            assert antichain_leq(p, A, B) == (fa <= fb)
            assert set(antichain_join(p, A, B)) == minimal(m, set(A) | set(B))
            assert set(antichain_meet(p, A, B)) == minimal(m, fa & fb)


def test_ideal_order(b2):
    assert ideal_order_leq(b2, (), ac(b2, "a"))
    assert ideal_order_leq(b2, ac(b2, "a"), ac(b2, "1"))
    assert not ideal_order_leq(b2, ac(b2, "1"), ac(b2, "a"))


@pytest.mark.parametrize("p", catalog(), ids=lambda p: p.name)
def test_distributive(p):
    ants = enumerate_antichains(p)
    j, mt = antichain_join, antichain_meet
    for A in ants:
        for B in ants:
            for C in ants:
                assert mt(p, A, j(p, B, C)) == j(p, mt(p, A, B), mt(p, A, C))
