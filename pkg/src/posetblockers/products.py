"""Closed forms for intersecters in two kinds of product poset.

Both functions evaluate the product formula from factor-level data only;
they never fall back to scanning the product.  Tests compare them with
:func:`posetblockers.blockers.intersecters` run directly on the product.
"""
from __future__ import annotations

from typing import Iterable

from .blockers import intersecters
from .errors import BadSubset, NotAProduct
from .poset import Antichain, Poset, cartesian_product, extremes, project_antichain, reduced_bounded_product


def _require_product(q: Poset, kind: str, p1: Poset, p2: Poset) -> None:
    info = q.product
    if info is None or info.kind != kind or info.left != p1 or info.right != p2:
        raise NotAProduct(f"expected the {kind} product of the given factors")


def intersecters_reduced_product(p1: Poset, p2: Poset, A: Iterable[int],
                                 q: Poset | None = None) -> tuple:
    """Intersecters of ``A`` in the reduced bounded product, with their minimum.

    ``A`` is given as element ids of ``q`` (built here when omitted).  If
    either factor's projection is blocked only by its top, the top of the
    product is the sole intersecter; otherwise the intersecters are the
    product of the factor intersecters minus their tops, plus the new top,
    and the minimal ones are the product of the factor blockers.
    """
    if q is None:
        q = reduced_bounded_product(p1, p2)
    else:
        _require_product(q, "reduced", p1, p2)
    A = frozenset(A)
    if not A:
        raise BadSubset("the subset must be nonempty")
    if q.zero in A or q.one in A:
        raise BadSubset("the subset must avoid the adjoined bounds")
    A1 = project_antichain(q, A, 1)
    A2 = project_antichain(q, A, 2)
    I1 = intersecters(p1, A1)
    I2 = intersecters(p2, A2)
    min1 = extremes(p1, I1, "min")
    min2 = extremes(p2, I2, "min")
    if min1 == (p1.one,) or min2 == (p2.one,):
        return frozenset({q.one}), (q.one,)
    enc = q.product.encode
    body = {enc(x1, x2) for x1 in I1 - {p1.one} for x2 in I2 - {p2.one}}
    minimal: Antichain = tuple(sorted(enc(x1, x2) for x1 in min1 for x2 in min2))
    return frozenset(body | {q.one}), minimal


def intersecters_full_product(p1: Poset, p2: Poset, A: Iterable[int],
                              q: Poset | None = None) -> frozenset:
    """Intersecters of ``A`` in ``q = p1 x p2`` from per-coordinate intersecters.

    Each pair ``(a1, a2)`` contributes ``(P1 x I(P2, a2)) | (I(P1, a1) x P2)``;
    the result is the intersection of the contributions.  A coordinate
    equal to its factor's bottom has no intersecters.
    """
    if q is None:
        q = cartesian_product(p1, p2)
    else:
        _require_product(q, "full", p1, p2)
    A = frozenset(A)
    if not A:
        raise BadSubset("the subset must be nonempty")
    if q.zero in A:
        raise BadSubset("the subset must avoid the bottom of the product")
    enc = q.product.encode
    out = None
    for a in sorted(A):
        a1, a2 = q.product.coords[a]
        right = intersecters(p2, {a2})
        left = intersecters(p1, {a1})
        part = {enc(x1, x2) for x1 in range(p1.n) for x2 in right}
        part |= {enc(x1, x2) for x1 in left for x2 in range(p2.n)}
        out = part if out is None else out & part
    return frozenset(out)
