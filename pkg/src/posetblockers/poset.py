"""Finite bounded posets stored as bitset rows.

Element identity is the positional id ``0..n-1``; labels only matter for
I/O.  Subsets travel as ``frozenset`` of ids, antichains as ascending
tuples of ids.  Internally everything is a Python ``int`` used as a bitset,
so order queries and ideal/filter generation are a handful of bit ops.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    BadSubset,
    CycleError,
    FactorTooSmall,
    NotAProduct,
    NotBounded,
    ParseError,
    TooSmall,
)

Antichain = tuple  # ascending tuple of element ids


def to_mask(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class ProductInfo:
    """Decoding tables carried by posets built from two factors.

    ``coords[q]`` is the ``(x1, x2)`` pair behind element ``q`` of the
    product, or ``None`` for the bounds adjoined by the reduced product.
    """

    kind: str  # "full" | "reduced"
    left: "Poset"
    right: "Poset"
    coords: tuple
    index: dict

    def encode(self, x1: int, x2: int) -> int:
        return self.index[(x1, x2)]


class Poset:
    """Immutable finite bounded poset with ``n >= 2`` elements.

    Use :meth:`from_cover_relations` to build one; the constructor trusts
    its ``up`` rows and performs no validation.
    """

    __slots__ = ("names", "n", "up", "down", "zero", "one", "atoms_mask",
                 "product", "name", "_index")

    def __init__(self, names: Sequence[str], up: Sequence[int], *,
                 product: Optional[ProductInfo] = None, name: Optional[str] = None):
        self.names = tuple(names)
        self.n = len(self.names)
        self.up = tuple(up)
        down = [0] * self.n
        for x, row in enumerate(self.up):
            for y in from_mask(row):
                down[y] |= 1 << x
        self.down = tuple(down)
        full = (1 << self.n) - 1
        self.zero = next(x for x in range(self.n) if self.up[x] == full)
        self.one = next(x for x in range(self.n) if self.down[x] == full)
        zbit = 1 << self.zero
        self.atoms_mask = to_mask(
            x for x in range(self.n) if x != self.zero and self.down[x] == zbit | (1 << x)
        )
        self.product = product
        self.name = name
        self._index = {label: i for i, label in enumerate(self.names)}

    @classmethod
    def from_cover_relations(cls, names: Sequence[str], covers: Iterable[tuple],
                             *, product: Optional[ProductInfo] = None,
                             name: Optional[str] = None) -> "Poset":
        """Build a poset from ``(lower, upper)`` pairs given as ids or labels.

        The pairs need not be covers; any generating relation works since the
        reflexive-transitive closure is taken.
        """
        names = tuple(str(x) for x in names)
        n = len(names)
        if len(set(names)) != n:
            raise ParseError("element labels must be distinct")
        if n < 2:
            raise TooSmall(f"a bounded poset needs at least 2 elements, got {n}")
        index = {label: i for i, label in enumerate(names)}

        def resolve(x):
            if isinstance(x, int) and not isinstance(x, bool):
                if not 0 <= x < n:
                    raise ParseError(f"element id {x} out of range")
                return x
            if x not in index:
                raise ParseError(f"unknown element {x!r}")
            return index[x]

        up = [1 << i for i in range(n)]
        for lo, hi in covers:
            up[resolve(lo)] |= 1 << resolve(hi)
        up = transitive_closure(up)
        for x in range(n):
            for y in from_mask(up[x] & ~(1 << x)):
                if up[y] >> x & 1:
                    raise CycleError(f"{names[x]} and {names[y]} lie on a cycle")
        full = (1 << n) - 1
        if not any(row == full for row in up):
            raise NotBounded("no unique minimum element")
        down_has_all = [0] * n
        for x in range(n):
            for y in from_mask(up[x]):
                down_has_all[y] |= 1 << x
        if not any(row == full for row in down_has_all):
            raise NotBounded("no unique maximum element")
        return cls(names, up, product=product, name=name)

    # queries ---------------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @property
    def atoms(self) -> frozenset:
        return frozenset(from_mask(self.atoms_mask))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def id_of(self, label: str) -> int:
        return self._index[label]

    def label(self, x: int) -> str:
        return self.names[x]

    def covers(self) -> list:
        """Cover pairs ``(x, y)`` of the Hasse diagram, sorted by ids."""
        out = []
        for x in range(self.n):
            for y in from_mask(self.up[x] & ~(1 << x)):
                if self.up[x] & self.down[y] == (1 << x) | (1 << y):
                    out.append((x, y))
        return out

    def up_mask(self, mask: int) -> int:
        out = 0
        for x in from_mask(mask):
            out |= self.up[x]
        return out

    def down_mask(self, mask: int) -> int:
        out = 0
        for x in from_mask(mask):
            out |= self.down[x]
        return out

    def min_mask(self, mask: int) -> int:
        return to_mask(x for x in from_mask(mask) if self.down[x] & mask == 1 << x)

    def max_mask(self, mask: int) -> int:
        return to_mask(x for x in from_mask(mask) if self.up[x] & mask == 1 << x)

    # dunder ----------------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.names, self.up))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Poset{tag} n={self.n} covers={len(self.covers())}>"


def transitive_closure(up: Sequence[int]) -> list:
    """Warshall's algorithm on bitset rows (row x = elements above x)."""
    rows = list(up)
    n = len(rows)
    for k in range(n):
        kbit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & kbit:
                rows[i] |= rk
    return rows


def leq(p: Poset, x: int, y: int) -> bool:
    return p.leq(x, y)


def hull(p: Poset, X: Iterable[int], direction: str = "up") -> frozenset:
    """Order filter (``"up"``) or order ideal (``"down"``) generated by X."""
    mask = to_mask(X)
    if direction == "up":
        return frozenset(from_mask(p.up_mask(mask)))
    if direction == "down":
        return frozenset(from_mask(p.down_mask(mask)))
    raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")


def extremes(p: Poset, X: Iterable[int], direction: str = "min") -> Antichain:
    mask = to_mask(X)
    if direction == "min":
        return from_mask(p.min_mask(mask))
    if direction == "max":
        return from_mask(p.max_mask(mask))
    raise ValueError(f"direction must be 'min' or 'max', not {direction!r}")


def is_antichain(p: Poset, X: Iterable[int]) -> bool:
    xs = sorted(set(X))
    return all(not p.comparable(a, b) for i, a in enumerate(xs) for b in xs[i + 1:])


def induced_subposet(p: Poset, keep: Iterable[int]) -> tuple:
    """Restrict ``p`` to ``keep`` (which must contain both bounds).

    Returns the subposet together with the old-id -> new-id mapping.
    """
    keep = sorted(set(keep))
    if p.zero not in keep or p.one not in keep:
        raise BadSubset("induced subposet must keep both bounds")
    remap = {old: new for new, old in enumerate(keep)}
    up = [to_mask(remap[y] for y in from_mask(p.up[x]) if y in remap) for x in keep]
    return Poset([p.names[x] for x in keep], up), remap


# products ------------------------------------------------------------------

def cartesian_product(p1: Poset, p2: Poset) -> Poset:
    """Componentwise-ordered product; elements in row-major ``(x1, x2)`` order."""
    coords = tuple((a, b) for a in range(p1.n) for b in range(p2.n))
    index = {c: i for i, c in enumerate(coords)}
    up = []
    for a, b in coords:
        up.append(to_mask(index[(c, d)] for c in from_mask(p1.up[a])
                          for d in from_mask(p2.up[b])))
    names = [f"({p1.names[a]};{p2.names[b]})" for a, b in coords]
    info = ProductInfo("full", p1, p2, coords, index)
    return Poset(names, up, product=info)


def reduced_bounded_product(p1: Poset, p2: Poset) -> Poset:
    """Product of the two interiors with a fresh bottom and top adjoined."""
    for p in (p1, p2):
        if p.n <= 2:
            raise FactorTooSmall(f"reduced product needs factors with more than 2 elements, got {p.n}")
    mid1 = [x for x in range(p1.n) if x not in (p1.zero, p1.one)]
    mid2 = [x for x in range(p2.n) if x not in (p2.zero, p2.one)]
    pairs = [(a, b) for a in mid1 for b in mid2]
    coords = (None, *pairs, None)
    index = {c: i + 1 for i, c in enumerate(pairs)}
    top = len(pairs) + 1
    up = [(1 << (top + 1)) - 1]
    for a, b in pairs:
        row = 1 << top
        for c in from_mask(p1.up[a]):
            for d in from_mask(p2.up[b]):
                if (c, d) in index:
                    row |= 1 << index[(c, d)]
        up.append(row)
    up.append(1 << top)
    names = ["0Q", *(f"({p1.names[a]};{p2.names[b]})" for a, b in pairs), "1Q"]
    info = ProductInfo("reduced", p1, p2, coords, index)
    return Poset(names, up, product=info)


def project_antichain(q: Poset, A: Iterable[int], which: int) -> frozenset:
    """Coordinate projection of a subset of a product onto factor 1 or 2."""
    if q.product is None:
        raise NotAProduct("poset was not built by a product constructor")
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    out = set()
    for x in A:
        c = q.product.coords[x]
        if c is None:
            raise BadSubset("subset must avoid the adjoined bounds")
        out.add(c[which - 1])
    return frozenset(out)


# order maps ------------------------------------------------------------------

class MapCertificate(NamedTuple):
    order_preserving: bool
    zero_safe: bool

    @property
    def ok(self) -> bool:
        return self.order_preserving and self.zero_safe


@dataclass(frozen=True)
class OrderMap:
    source: Poset
    target: Poset
    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.source.n:
            raise ValueError("image must assign one target element per source element")
        if any(not 0 <= y < self.target.n for y in self.image):
            raise ValueError("image contains an invalid target id")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def apply(self, X: Iterable[int]) -> frozenset:
        return frozenset(self.image[x] for x in X)


def validate_map(m: OrderMap) -> MapCertificate:
    src, tgt = m.source, m.target
    monotone = all(
        tgt.leq(m.image[x], m.image[y])
        for x in range(src.n) for y in from_mask(src.up[x])
    )
    zero_safe = m.image[src.zero] == tgt.zero and all(
        m.image[x] != tgt.zero for x in range(src.n) if x != src.zero
    )
    return MapCertificate(monotone, zero_safe)
