"""The lattice of antichains of a finite bounded poset.

Antichains are ordered by inclusion of the filters they generate, which
makes the lattice isomorphic to the (distributive) lattice of order
filters.  The empty antichain is the bottom and ``(zero,)`` is the top.
"""
from __future__ import annotations

from typing import Iterable

from .poset import Antichain, Poset, from_mask, to_mask


def canonical(A: Iterable[int]) -> Antichain:
    return tuple(sorted(set(A)))


def antichain_leq(p: Poset, A1: Iterable[int], A2: Iterable[int]) -> bool:
    f1 = p.up_mask(to_mask(A1))
    f2 = p.up_mask(to_mask(A2))
    return f1 & ~f2 == 0


def antichain_join(p: Poset, A1: Iterable[int], A2: Iterable[int]) -> Antichain:
    return from_mask(p.min_mask(to_mask(A1) | to_mask(A2)))


def antichain_meet(p: Poset, A1: Iterable[int], A2: Iterable[int]) -> Antichain:
    common = p.up_mask(to_mask(A1)) & p.up_mask(to_mask(A2))
    return from_mask(p.min_mask(common))


def ideal_order_leq(p: Poset, C1: Iterable[int], C2: Iterable[int]) -> bool:
    i1 = p.down_mask(to_mask(C1))
    i2 = p.down_mask(to_mask(C2))
    return i1 & ~i2 == 0


def enumerate_antichains(p: Poset) -> list:
    """All antichains of ``p``, graded by size and then lexicographic on ids."""
    out = []
    comparable = [p.up[x] | p.down[x] for x in range(p.n)]

    def extend(start: int, chosen: tuple, blocked: int) -> None:
        out.append(chosen)
        for x in range(start, p.n):
            if not blocked >> x & 1:
                extend(x + 1, chosen + (x,), blocked | comparable[x])

    extend(0, (), 0)
    out.sort(key=lambda A: (len(A), A))
    return out


def meet_all(p: Poset, antichains: Iterable[Iterable[int]]) -> Antichain:
    """Meet of a family; the empty meet is the top ``(zero,)``."""
    filt = p.full_mask
    for A in antichains:
        filt &= p.up_mask(to_mask(A))
    return from_mask(p.min_mask(filt))


def join_all(p: Poset, antichains: Iterable[Iterable[int]]) -> Antichain:
    """Join of a family; the empty join is the bottom ``()``."""
    mask = 0
    for A in antichains:
        mask |= to_mask(A)
    return from_mask(p.min_mask(mask))
