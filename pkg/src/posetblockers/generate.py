"""Deterministic test corpora: a fixed catalog plus seeded random instances.

Randomness comes from SplitMix64 so a corpus is reproducible from its seed
on any platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)

``uniform()`` uses the top 53 bits, ``below(k)`` is ``(output * k) >> 64``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .clutter import Clutter, boolean_lattice, minimal_members
from .errors import OutOfEnvelope
from .poset import OrderMap, Poset, cartesian_product, from_mask, reduced_bounded_product, validate_map

MASK64 = (1 << 64) - 1
EDGE_PROBABILITY = 0.3
MAX_MAP_ATTEMPTS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        return (self.next() * k) >> 64

    def choice(self, seq):
        return seq[self.below(len(seq))]


# catalog -------------------------------------------------------------------

def chain(n: int) -> Poset:
    if n == 2:
        names = ["0", "1"]
    elif n == 3:
        names = ["0", "m", "1"]
    else:
        names = ["0", *(f"m{i}" for i in range(1, n - 1)), "1"]
    return Poset.from_cover_relations(names, [(i, i + 1) for i in range(n - 1)], name=f"C{n}")


def b2() -> Poset:
    return Poset.from_cover_relations(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], name="B2")


def n5() -> Poset:
    return Poset.from_cover_relations(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1")], name="N5")


def m3() -> Poset:
    return Poset.from_cover_relations(
        ["0", "a", "b", "c", "1"],
        [("0", m) for m in "abc"] + [(m, "1") for m in "abc"], name="M3")


def catalog() -> list:
    posets = [chain(n) for n in range(2, 6)]
    posets += [boolean_lattice(n) for n in range(1, 4)]
    posets += [b2(), n5(), m3()]
    c3 = chain(3)
    grid = cartesian_product(c3, c3)
    grid.name = "C3xC3"
    reduced = reduced_bounded_product(c3, b2())
    reduced.name = "C3*B2"
    return posets + [grid, reduced]


def catalog_by_name() -> dict:
    return {p.name: p for p in catalog()}


# random instances --------------------------------------------------------------

def random_bounded_poset(k: int, seed: int) -> Poset:
    """Random order on ``k`` middle elements with a fresh bottom and top.

    Each pair ``j < i`` of middle positions gets the relation ``j < i``
    with probability 0.3; the closure is taken on construction.
    """
    if not 1 <= k <= 8:
        raise OutOfEnvelope(f"random_bounded_poset supports 1 <= k <= 8, got {k}")
    rng = SplitMix64(seed)
    names = ["0", *(f"p{i}" for i in range(1, k + 1)), "1"]
    relations = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(1, i):
            if rng.uniform() < EDGE_PROBABILITY:
                relations.append((j, i))
    return Poset.from_cover_relations(names, relations, name=f"rand(k={k},seed={seed})")


def random_clutter(n: int, seed: int) -> Clutter:
    """Sperner reduction of a random nonempty family of nonempty subsets of 1..n."""
    if not 1 <= n <= 4:
        raise OutOfEnvelope(f"random_clutter supports 1 <= n <= 4, got {n}")
    rng = SplitMix64(seed)
    nonempty = (1 << n) - 1
    family = []
    for _ in range(1 + rng.below(nonempty)):
        mask = 1 + rng.below(nonempty)
        family.append(frozenset(i + 1 for i in from_mask(mask)))
    return Clutter(n, minimal_members(family))


def random_safe_map(p1: Poset, p2: Poset, seed: int,
                    attempts: int = MAX_MAP_ATTEMPTS) -> Optional[OrderMap]:
    """Random order-preserving map sending only the bottom to the bottom.

    Source elements are visited bottom-up and each picks a uniformly random
    nonzero target above the images of everything below it.  Every draw is
    validated; ``None`` is returned if ``attempts`` draws all fail.
    """
    rng = SplitMix64(seed)
    order = sorted(range(p1.n), key=lambda x: (bin(p1.down[x]).count("1"), x))
    for _ in range(attempts):
        image = [0] * p1.n
        for x in order:
            if x == p1.zero:
                image[x] = p2.zero
                continue
            floor = p2.full_mask
            for z in from_mask(p1.down[x] & ~(1 << x)):
                floor &= p2.up[image[z]]
            allowed = [y for y in from_mask(floor) if y != p2.zero]
            image[x] = rng.choice(allowed)
        m = OrderMap(p1, p2, tuple(image))
        if validate_map(m).ok:
            return m
    return None


# corpus --------------------------------------------------------------------------

class MapCase(NamedTuple):
    map: OrderMap
    subset: frozenset


@dataclass
class Corpus:
    seed: int
    posets: list = field(default_factory=list)
    clutters: list = field(default_factory=list)
    maps: list = field(default_factory=list)

    def dump(self) -> str:
        """Canonical text form; equal seeds give byte-identical dumps."""
        lines = [f"seed {self.seed}"]
        for p in self.posets:
            lines.append(f"poset {p.name} {' '.join(p.names)} | "
                         + " ".join(f"{a}<{b}" for a, b in p.covers()))
        for c in self.clutters:
            lines.append(f"clutter {c.ground_size} {c}")
        for case in self.maps:
            m = case.map
            lines.append(f"map {m.source.name}->{m.target.name} {list(m.image)} "
                         f"{sorted(case.subset)}")
        return "\n".join(lines) + "\n"


def build_corpus(seed: int = 42, samples: int = 200, max_size: int = 6,
                 clutter_samples: int = 100, map_cases: int = 100) -> Corpus:
    if not 1 <= max_size <= 8:
        raise OutOfEnvelope(f"max_size must be in 1..8, got {max_size}")
    rng = SplitMix64(seed)
    corpus = Corpus(seed)
    cat = catalog()
    corpus.posets.extend(cat)
    for _ in range(samples):
        k = 1 + rng.below(max_size)
        corpus.posets.append(random_bounded_poset(k, rng.next()))
    for _ in range(clutter_samples):
        corpus.clutters.append(random_clutter(4, rng.next()))
    while len(corpus.maps) < map_cases:
        p1, p2 = rng.choice(cat), rng.choice(cat)
        m = random_safe_map(p1, p2, rng.next())
        if m is None:
            continue
        subset = frozenset(from_mask(rng.below(1 << p1.n)))
        corpus.maps.append(MapCase(m, subset))
    return corpus
