"""Classical clutters, blocking sets and the blocker of a set family.

Ground sets are ``{1, ..., n}``.  A family is any iterable of subsets; a
:class:`Clutter` is a family that is Sperner (no member contains another).
The trivial clutters are the empty family and ``{frozenset()}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import HypothesisViolated, OutOfEnvelope, ParseError
from .poset import Antichain, Poset, from_mask, to_mask


def _sort_key(s: frozenset):
    return (len(s), tuple(sorted(s)))


def minimal_members(family: Iterable[Iterable[int]]) -> tuple:
    """Sperner reduction: keep the inclusion-minimal members, deduplicated."""
    sets = {frozenset(s) for s in family}
    keep = [s for s in sets if not any(t < s for t in sets)]
    return tuple(sorted(keep, key=_sort_key))


@dataclass(frozen=True)
class Clutter:
    ground_size: int
    sets: tuple

    def __post_init__(self):
        sets = {frozenset(s) for s in self.sets}
        for s in sets:
            if any(not 1 <= e <= self.ground_size for e in s):
                raise ValueError(f"member {sorted(s)} leaves the ground set 1..{self.ground_size}")
        if any(s < t for s in sets for t in sets):
            raise ValueError("family is not a clutter: one member contains another")
        object.__setattr__(self, "sets", tuple(sorted(sets, key=_sort_key)))

    @classmethod
    def reduce(cls, ground_size: int, family: Iterable[Iterable[int]]) -> "Clutter":
        return cls(ground_size, minimal_members(family))

    @property
    def is_trivial(self) -> bool:
        return self.sets in ((), (frozenset(),))

    def __len__(self) -> int:
        return len(self.sets)

    def __str__(self) -> str:
        return format_clutter(self)


def is_blocking_set(H: Iterable[int], G: Iterable[Iterable[int]]) -> bool:
    G = [frozenset(g) for g in G]
    if not G or any(not g for g in G):
        raise HypothesisViolated("blocking sets are defined for nonempty families of nonempty sets")
    H = frozenset(H)
    return all(H & g for g in G)


def family_blocker(ground: Iterable[int], family: Iterable[Iterable[int]]) -> tuple:
    """Minimal blocking sets of an arbitrary family over ``ground``.

    Exhaustive over all subsets of ``ground`` in order of size, so a set
    is kept exactly when none of its proper subsets was already kept.
    Trivial families follow the usual conventions: the empty family is
    blocked by the empty set alone, and a family containing the empty set
    has no blocking sets.
    """
    ground = sorted(set(ground))
    family = [frozenset(s) for s in family]
    if any(not s for s in family):
        return ()
    found = []
    for size in range(len(ground) + 1):
        for H in combinations(ground, size):
            H = frozenset(H)
            if any(f <= H for f in found):
                continue
            if all(H & s for s in family):
                found.append(H)
    return tuple(sorted(found, key=_sort_key))


def clutter_blocker(G: Clutter) -> Clutter:
    return Clutter(G.ground_size, family_blocker(range(1, G.ground_size + 1), G.sets))


# Boolean lattice bridge ------------------------------------------------------

def boolean_lattice(n: int) -> Poset:
    """Subsets of ``{1..n}`` ordered by inclusion; element id = bitmask of the subset."""
    if not 1 <= n <= 4:
        raise OutOfEnvelope(f"boolean_lattice supports 1 <= n <= 4, got {n}")
    size = 1 << n
    names = ["".join(str(i + 1) for i in range(n) if s >> i & 1) or "0" for s in range(size)]
    up = [to_mask(t for t in range(size) if s & t == s) for s in range(size)]
    return Poset(names, up, name=f"Bool{n}")


def subset_element(S: Iterable[int]) -> int:
    """Element id in :func:`boolean_lattice` of the subset ``S`` of ``{1..n}``."""
    return to_mask(e - 1 for e in S)


def element_subset(x: int) -> frozenset:
    return frozenset(i + 1 for i in from_mask(x))


def clutter_to_antichain(G: Clutter) -> Antichain:
    return tuple(sorted(subset_element(s) for s in G.sets))


def antichain_to_clutter(n: int, A: Iterable[int]) -> Clutter:
    return Clutter(n, [element_subset(x) for x in A])


# serialization -----------------------------------------------------------------

def format_clutter(G: Clutter) -> str:
    if not G.sets:
        return "-"
    if G.sets == (frozenset(),):
        return "0"
    return ";".join(",".join(str(e) for e in sorted(s)) for s in G.sets)


def parse_clutter(text: str, ground_size: int) -> Clutter:
    text = text.strip()
    if text == "-":
        return Clutter(ground_size, ())
    if text == "0":
        return Clutter(ground_size, (frozenset(),))
    family = []
    for chunk in text.split(";"):
        try:
            members = frozenset(int(tok) for tok in chunk.split(","))
        except ValueError as exc:
            raise ParseError(f"bad clutter member {chunk!r}") from exc
        family.append(members)
    try:
        return Clutter(ground_size, family)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
