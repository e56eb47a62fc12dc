from itertools import combinations

import pytest

from helpers import ids
from posetblockers.blockers import intersecters
from posetblockers.errors import BadSubset, FactorTooSmall, NotAProduct
from posetblockers.poset import cartesian_product, extremes, reduced_bounded_product
from posetblockers.products import intersecters_full_product, intersecters_reduced_product


def test_reduced_case_two(c3):
    q = reduced_bounded_product(c3, c3)
    I, lo = intersecters_reduced_product(c3, c3, ids(q, "(m;m)"), q)
    assert I == ids(q, "(m;m),1Q")
    assert lo == (q.id_of("(m;m)"),)


def test_reduced_case_one(c3, b2):
    q = reduced_bounded_product(c3, b2)
    A = ids(q, "(m;a),(m;b)")
    assert extremes(b2, intersecters(b2, ids(b2, "a,b")), "min") == (b2.one,)
    I, lo = intersecters_reduced_product(c3, b2, A, q)
    assert I == frozenset({q.one}) and lo == (q.one,)
    assert intersecters(q, A) == I


def test_reduced_builds_product_when_omitted(c3):
    I, lo = intersecters_reduced_product(c3, c3, [1])
    assert I == frozenset({1, 2})


def test_reduced_errors(c2, c3, b2):
    q = reduced_bounded_product(c3, b2)
    with pytest.raises(BadSubset):
        intersecters_reduced_product(c3, b2, [], q)
    with pytest.raises(BadSubset):
        intersecters_reduced_product(c3, b2, [q.one], q)
    with pytest.raises(FactorTooSmall):
        intersecters_reduced_product(c2, c3, [1])
    with pytest.raises(NotAProduct):
        intersecters_reduced_product(c3, c3, [1], q)


def test_full_product_examples(c2, c3):
    q = cartesian_product(c2, c2)
    assert intersecters_full_product(c2, c2, ids(q, "(1;1)"), q) == ids(q, "(0;1),(1;0),(1;1)")
    assert intersecters_full_product(c2, c2, ids(q, "(1;0)"), q) == ids(q, "(1;0),(1;1)")
    q = cartesian_product(c2, c3)
    expected = ids(q, "(0;m),(0;1),(1;0),(1;m),(1;1)")
    assert intersecters_full_product(c2, c3, ids(q, "(1;m)"), q) == expected


def test_full_product_errors(c2, c3):
    q = cartesian_product(c2, c3)
    with pytest.raises(BadSubset):
        intersecters_full_product(c2, c3, [], q)
    with pytest.raises(BadSubset):
        intersecters_full_product(c2, c3, [q.zero], q)
    with pytest.raises(NotAProduct):
        intersecters_full_product(c3, c2, [1], q)


@pytest.mark.parametrize("names", [("C3", "B2"), ("N5", "M3"), ("C4", "N5"), ("M3", "M3")])
def test_reduced_exhaustive(cat, names):
    p1, p2 = cat[names[0]], cat[names[1]]
    q = reduced_bounded_product(p1, p2)
    middles = [x for x in range(q.n) if x not in (q.zero, q.one)]
    for k in range(1, len(middles) + 1):
        for A in combinations(middles, k):
            I, lo = intersecters_reduced_product(p1, p2, A, q)
            assert I == intersecters(q, A)
            assert lo == extremes(q, I, "min")


@pytest.mark.parametrize("names", [("C2", "C3"), ("C3", "B2"), ("B2", "B2"), ("C3", "C3")])
def test_full_exhaustive(cat, names):
    p1, p2 = cat[names[0]], cat[names[1]]
    q = cartesian_product(p1, p2)
    nonzero = [x for x in range(q.n) if x != q.zero]
    for k in range(1, len(nonzero) + 1):
        for A in combinations(nonzero, k):
            assert intersecters_full_product(p1, p2, A, q) == intersecters(q, A)
