"""Intersecters, complementers, the blocker and complementary maps.

An element ``b`` is an intersecter for ``A`` when, for every nonzero
``a`` in ``A``, some atom lies below both ``a`` and ``b``.  Two degenerate
cases are fixed by definition: every element intersects the empty set,
and nothing intersects ``{zero}``.  Complementers are the rest.

``blocker(p, A)`` is the antichain of minimal intersecters and
``complementary(p, A)`` the antichain of maximal complementers.  The
image of the blocker map over all antichains is the lattice of blockers,
materialized by :func:`blocker_image`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .antichains import antichain_leq, antichain_meet, canonical, enumerate_antichains
from .clutter import family_blocker
from .errors import HypothesisViolated, NotABlocker, UnsafeMap
from .poset import Antichain, OrderMap, Poset, from_mask, to_mask, validate_map


def intersecter_mask(p: Poset, mask: int) -> int:
    """Bitset form of :func:`intersecters`, scanning every candidate element."""
    if mask == 0:
        return p.full_mask
    zbit = 1 << p.zero
    if mask == zbit:
        return 0
    targets = [p.down[a] & p.atoms_mask for a in from_mask(mask & ~zbit)]
    out = 0
    for b in range(p.n):
        below_b = p.down[b]
        if all(below_b & t for t in targets):
            out |= 1 << b
    return out


def intersecters(p: Poset, A: Iterable[int]) -> frozenset:
    return frozenset(from_mask(intersecter_mask(p, to_mask(A))))


def complementers(p: Poset, A: Iterable[int]) -> frozenset:
    return frozenset(from_mask(p.full_mask & ~intersecter_mask(p, to_mask(A))))


def _check_lemma_hypothesis(p: Poset, A: Iterable[int]) -> list:
    A = sorted(set(A))
    if not A or p.zero in A:
        raise HypothesisViolated("formula needs a nonempty subset avoiding the bottom element")
    return A


def intersecters_by_filter_formula(p: Poset, A: Iterable[int]) -> frozenset:
    """Intersect, over ``a`` in A, the filter generated by the atoms below ``a``."""
    A = _check_lemma_hypothesis(p, A)
    out = p.full_mask
    for a in A:
        out &= p.up_mask(p.down[a] & p.atoms_mask)
    return frozenset(from_mask(out))


def intersecters_by_clutter_formula(p: Poset, A: Iterable[int]) -> frozenset:
    """Union over minimal atom transversals E of the common filter of E.

    The family of atom-sets ``{atoms below a : a in A}`` is handed to the
    classical exhaustive blocker.
    """
    A = _check_lemma_hypothesis(p, A)
    family = [from_mask(p.down[a] & p.atoms_mask) for a in A]
    out = 0
    for E in family_blocker(from_mask(p.atoms_mask), family):
        common = p.full_mask
        for e in E:
            common &= p.up[e]
        out |= common
    return frozenset(from_mask(out))


def blocker(p: Poset, A: Iterable[int]) -> Antichain:
    return from_mask(p.min_mask(intersecter_mask(p, to_mask(A))))


def complementary(p: Poset, A: Iterable[int]) -> Antichain:
    return from_mask(p.max_mask(p.full_mask & ~intersecter_mask(p, to_mask(A))))


@dataclass(frozen=True)
class BlockerImage:
    """The lattice of blockers of ``poset`` with the preimage of each blocker.

    ``blockers`` follows the canonical antichain enumeration order and
    ``order[i][j]`` is True iff ``blockers[i] <= blockers[j]`` in the
    antichain lattice.
    """

    poset: Poset
    antichains: tuple
    blockers: tuple
    order: tuple
    preimages: dict
    _position: dict = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self._position.update({B: i for i, B in enumerate(self.blockers)})

    def __contains__(self, B) -> bool:
        return canonical(B) in self._position

    def __len__(self) -> int:
        return len(self.blockers)

    def index(self, B: Iterable[int]) -> int:
        B = canonical(B)
        if B not in self._position:
            raise NotABlocker(f"{B} is not in the blocker image")
        return self._position[B]

    def leq(self, B1, B2) -> bool:
        return self.order[self.index(B1)][self.index(B2)]

    @property
    def bottom(self) -> Antichain:
        return self._extreme(lambda i, j: self.order[i][j])

    @property
    def top(self) -> Antichain:
        return self._extreme(lambda i, j: self.order[j][i])

    def _extreme(self, below: Callable) -> Antichain:
        k = len(self.blockers)
        hits = [self.blockers[i] for i in range(k) if all(below(i, j) for j in range(k))]
        return hits[0] if len(hits) == 1 else None

    def covers(self) -> list:
        """Cover pairs ``(i, j)`` of the image order, as blocker indices."""
        k = len(self.blockers)
        lt = [[self.order[i][j] and i != j for j in range(k)] for i in range(k)]
        return [(i, j) for i in range(k) for j in range(k)
                if lt[i][j] and not any(lt[i][m] and lt[m][j] for m in range(k))]

    def atoms(self) -> list:
        b = self.index(self.bottom)
        return [self.blockers[j] for i, j in self.covers() if i == b]

    def coatoms(self) -> list:
        t = self.index(self.top)
        return [self.blockers[i] for i, j in self.covers() if j == t]


def blocker_image(p: Poset) -> BlockerImage:
    ants = enumerate_antichains(p)
    preimages: dict = {}
    for A in ants:
        preimages.setdefault(blocker(p, A), []).append(A)
    order_key = {A: i for i, A in enumerate(ants)}
    blockers = tuple(sorted(preimages, key=order_key.__getitem__))
    order = tuple(tuple(antichain_leq(p, B1, B2) for B2 in blockers) for B1 in blockers)
    return BlockerImage(
        poset=p,
        antichains=tuple(ants),
        blockers=blockers,
        order=order,
        preimages={B: tuple(v) for B, v in preimages.items()},
    )


def _require_blockers(img: BlockerImage, *Bs) -> None:
    for B in Bs:
        img.index(B)


def blocker_lattice_meet(img: BlockerImage, B1: Iterable[int], B2: Iterable[int]) -> Antichain:
    _require_blockers(img, B1, B2)
    return antichain_meet(img.poset, B1, B2)


def blocker_lattice_join(img: BlockerImage, B1: Iterable[int], B2: Iterable[int]) -> Antichain:
    _require_blockers(img, B1, B2)
    p = img.poset
    return blocker(p, antichain_meet(p, blocker(p, B1), blocker(p, B2)))


def check_map_proposition(m: OrderMap, A1: Iterable[int]) -> bool:
    """True iff images of intersecters for A1 are intersecters for the image of A1."""
    cert = validate_map(m)
    if not cert.ok:
        raise UnsafeMap(f"map fails its certificate: {cert}")
    A1 = frozenset(A1)
    pushed = m.apply(intersecters(m.source, A1))
    return pushed <= intersecters(m.target, m.apply(A1))
