"""Property suites quantified over a corpus, with counterexample shrinking.

Every poset-level property is a predicate over a poset and zero or more
arguments drawn from one domain (antichains, subsets, or nonempty subsets
avoiding the bottom).  The runner enumerates the domain exhaustively,
except that three-argument properties are sampled once the number of
triples exceeds ``max_triples``.

The blocker map is injectable so a deliberately broken implementation
can be checked for detection.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import chain as iter_chain, combinations, product
from typing import Callable, Iterable, NamedTuple, Optional

from . import antichains as al
from .blockers import (
    blocker,
    check_map_proposition,
    complementary,
    complementers,
    intersecters,
    intersecters_by_clutter_formula,
    intersecters_by_filter_formula,
)
from .clutter import (
    Clutter,
    antichain_to_clutter,
    boolean_lattice,
    clutter_blocker,
    clutter_to_antichain,
    family_blocker,
    minimal_members,
)
from .formats import format_antichain, format_poset
from .generate import SplitMix64, catalog_by_name
from .poset import (
    Poset,
    cartesian_product,
    extremes,
    from_mask,
    hull,
    induced_subposet,
    is_antichain,
    reduced_bounded_product,
    to_mask,
    transitive_closure,
)
from .products import intersecters_full_product, intersecters_reduced_product

BlockerFn = Callable[[Poset, Iterable[int]], tuple]


def blocker_without_min(p: Poset, A: Iterable[int]) -> tuple:
    """Fault injection: returns every intersecter instead of the minimal ones."""
    return tuple(sorted(intersecters(p, A)))


FAULTS = {"skip-min": blocker_without_min}


class Context:
    """Per-poset cache of antichains, the blocker map and its image."""

    def __init__(self, poset: Poset, beta: BlockerFn = blocker):
        self.poset = poset
        self._beta_fn = beta
        self._beta: dict = {}
        self.antichains = al.enumerate_antichains(poset)
        self._image = None

    def beta(self, A) -> tuple:
        A = tuple(sorted(set(A)))
        if A not in self._beta:
            self._beta[A] = tuple(sorted(set(self._beta_fn(self.poset, A))))
        return self._beta[A]

    @property
    def image(self) -> list:
        if self._image is None:
            seen = dict.fromkeys(self.beta(A) for A in self.antichains)
            self._image = list(seen)
        return self._image

    def filt(self, A) -> int:
        return self.poset.up_mask(to_mask(A))

    def leq(self, A1, A2) -> bool:
        return self.filt(A1) & ~self.filt(A2) == 0

    def subsets(self) -> list:
        return [from_mask(m) for m in range(1 << self.poset.n)]

    def nz_subsets(self) -> list:
        z = self.poset.zero
        return [S for S in self.subsets() if S and z not in S]

    def domain(self, name: str) -> list:
        if name == "antichains":
            return self.antichains
        if name == "subsets":
            return self.subsets()
        if name == "nz_subsets":
            return self.nz_subsets()
        raise ValueError(name)

    def admissible(self, name: str, X) -> bool:
        if name == "antichains":
            return is_antichain(self.poset, X)
        if name == "nz_subsets":
            return bool(X) and self.poset.zero not in X
        return True


class Property(NamedTuple):
    name: str
    module: str
    domain: str  # "none" | "antichains" | "subsets" | "nz_subsets"
    arity: int
    check: Callable


# poset-core ---------------------------------------------------------------------

def _closure_idempotent(c: Context) -> bool:
    return transitive_closure(c.poset.up) == list(c.poset.up)


def _antisymmetry(c: Context) -> bool:
    p = c.poset
    return all(not (p.leq(x, y) and p.leq(y, x)) or x == y
               for x in range(p.n) for y in range(p.n))


def _bounded_atoms(c: Context) -> bool:
    p = c.poset
    if p.n < 2 or any(not (p.leq(p.zero, x) and p.leq(x, p.one)) for x in range(p.n)):
        return False
    nonzero = [x for x in range(p.n) if x != p.zero]
    return set(extremes(p, nonzero, "min")) == p.atoms


def _hulls_closed(c: Context, X) -> bool:
    p = c.poset
    U, D = hull(p, X, "up"), hull(p, X, "down")
    return (all(y in U for u in U for y in range(p.n) if p.leq(u, y))
            and all(y in D for d in D for y in range(p.n) if p.leq(y, d))
            and set(X) <= U and set(X) <= D)


def _extremes_laws(c: Context, X) -> bool:
    p = c.poset
    X = set(X)
    lo, hi = extremes(p, X, "min"), extremes(p, X, "max")
    if not (set(lo) <= X and set(hi) <= X and is_antichain(p, lo) and is_antichain(p, hi)):
        return False
    if hull(p, X, "up") == X and not hull(p, lo, "up") >= X:
        return False
    return True


# antichain-lattice ----------------------------------------------------------------

def _lattice_laws(c: Context, A, B) -> bool:
    p = c.poset
    j, m = al.antichain_join, al.antichain_meet
    return (j(p, A, A) == A and m(p, A, A) == A
            and j(p, A, B) == j(p, B, A) and m(p, A, B) == m(p, B, A)
            and j(p, A, m(p, A, B)) == A and m(p, A, j(p, A, B)) == A)


def _associativity(c: Context, A, B, C) -> bool:
    p = c.poset
    j, m = al.antichain_join, al.antichain_meet
    return (j(p, j(p, A, B), C) == j(p, A, j(p, B, C))
            and m(p, m(p, A, B), C) == m(p, A, m(p, B, C)))


def _distributivity(c: Context, A, B, C) -> bool:
    p = c.poset
    j, m = al.antichain_join, al.antichain_meet
    return m(p, A, j(p, B, C)) == j(p, m(p, A, B), m(p, A, C))


def _order_compatibility(c: Context, A, B) -> bool:
    p = c.poset
    le = al.antichain_leq(p, A, B)
    return le == (al.antichain_meet(p, A, B) == A) == (al.antichain_join(p, A, B) == B)


def _antichain_bounds(c: Context) -> bool:
    p = c.poset
    ants = c.antichains
    bottoms = [A for A in ants if all(al.antichain_leq(p, A, B) for B in ants)]
    tops = [A for A in ants if all(al.antichain_leq(p, B, A) for B in ants)]
    return bottoms == [()] and tops == [(p.zero,)]


def _filter_bijection(c: Context, A) -> bool:
    p = c.poset
    return extremes(p, hull(p, A, "up"), "min") == A


def _filters_injective(c: Context) -> bool:
    return len({c.filt(A) for A in c.antichains}) == len(c.antichains)


# blocker-maps ----------------------------------------------------------------------

def _partition(c: Context, A) -> bool:
    p = c.poset
    I, C = intersecters(p, A), complementers(p, A)
    return not (I & C) and (I | C) == frozenset(range(p.n))


def _nonemptiness(c: Context, A) -> bool:
    p = c.poset
    return p.one in intersecters(p, A) and p.zero in complementers(p, A)


def _min_reduction(c: Context, A) -> bool:
    p = c.poset
    lo = extremes(p, A, "min")
    return intersecters(p, A) == intersecters(p, lo) and complementers(p, A) == complementers(p, lo)


def _factorization(c: Context, A) -> bool:
    p = c.poset
    I = frozenset(range(p.n))
    C = frozenset()
    for a in A:
        I &= intersecters(p, {a})
        C |= complementers(p, {a})
    return intersecters(p, A) == I and complementers(p, A) == C


def _formula_equivalence(c: Context, A) -> bool:
    p = c.poset
    direct = intersecters(p, A)
    return (direct == intersecters_by_filter_formula(p, A)
            == intersecters_by_clutter_formula(p, A))


def _filter_ideal_structure(c: Context, A) -> bool:
    p = c.poset
    I, C = intersecters(p, A), complementers(p, A)
    return (hull(p, extremes(p, I, "min"), "up") == I
            and hull(p, extremes(p, C, "max"), "down") == C)


def _antitonicity(c: Context, A1, A2) -> bool:
    return not c.leq(A1, A2) or c.leq(c.beta(A2), c.beta(A1))


def _reciprocity(c: Context, A) -> bool:
    return set(A) <= intersecters(c.poset, c.beta(A))


def _involution(c: Context, A) -> bool:
    B = c.beta(A)
    return c.beta(c.beta(B)) == B


def _double_form(c: Context, A) -> bool:
    """The blocker as a meet of joins and as a join of meets, and its fixed points."""
    p = c.poset
    if A in ((), (p.zero,)):
        return True
    singles = [c.beta((a,)) for a in A]
    left = al.meet_all(p, [al.join_all(p, [(e,) for e in Ba]) for Ba in singles])
    transversals = family_blocker(set().union(*singles), singles)
    right = al.join_all(p, [al.meet_all(p, [(e,) for e in E]) for E in transversals])
    fixed = c.beta(A) == A
    return c.beta(A) == left == right and fixed == (A == left)


def _preimage_join_closed(c: Context, A1, A2) -> bool:
    if c.beta(A1) != c.beta(A2):
        return True
    return c.beta(al.antichain_join(c.poset, A1, A2)) == c.beta(A1)


def _preimage_greatest(c: Context, A) -> bool:
    B = c.beta(A)
    top = c.beta(B)
    return c.beta(top) == B and c.leq(A, top)


def _meet_closed(c: Context, A1, A2) -> bool:
    M = al.antichain_meet(c.poset, c.beta(A1), c.beta(A2))
    return M in set(c.image)


def _self_duality(c: Context, A1, A2) -> bool:
    B1, B2 = c.beta(A1), c.beta(A2)
    image = set(c.image)
    if c.beta(B1) not in image:
        return False
    return c.leq(B1, B2) == c.leq(c.beta(B2), c.beta(B1))


def _image_bounds(c: Context) -> bool:
    p = c.poset
    image = c.image
    filters = {B: c.filt(B) for B in image}

    def le(X, Y):
        return filters[X] & ~filters[Y] == 0

    bottoms = [B for B in image if all(le(B, X) for X in image)]
    tops = [B for B in image if all(le(X, B) for X in image)]
    if bottoms != [()] or tops != [(p.zero,)]:
        return False
    strict = [B for B in image if B not in ((), (p.zero,))]
    atoms = [B for B in strict if not any(X != B and le(X, B) for X in strict)]
    coatoms = [B for B in strict if not any(X != B and le(B, X) for X in strict)]
    atoms_set = tuple(sorted(p.atoms))
    if not strict:
        return False
    return atoms == [c.beta(atoms_set)] and coatoms == [atoms_set]


def _join_formula(c: Context, A1, A2) -> bool:
    p = c.poset
    B1, B2 = c.beta(A1), c.beta(A2)
    J = c.beta(al.antichain_meet(p, c.beta(B1), c.beta(B2)))
    if J not in set(c.image) or not (c.leq(B1, J) and c.leq(B2, J)):
        return False
    return all(c.leq(J, C) for C in c.image if c.leq(B1, C) and c.leq(B2, C))


def _gamma_isomorphism(c: Context, A1, A2) -> bool:
    p = c.poset
    B1, B2 = c.beta(A1), c.beta(A2)
    g1, g2 = complementary(p, B1), complementary(p, B2)
    if (B1 != B2) and g1 == g2:
        return False
    return c.leq(B1, B2) == al.ideal_order_leq(p, g1, g2)


PROPERTIES = [
    Property("closure-idempotent", "poset-core", "none", 0, _closure_idempotent),
    Property("antisymmetry", "poset-core", "none", 0, _antisymmetry),
    Property("bounds-and-atoms", "poset-core", "none", 0, _bounded_atoms),
    Property("hulls-closed", "poset-core", "subsets", 1, _hulls_closed),
    Property("extremes-laws", "poset-core", "subsets", 1, _extremes_laws),
    Property("lattice-laws", "antichain-lattice", "antichains", 2, _lattice_laws),
    Property("associativity", "antichain-lattice", "antichains", 3, _associativity),
    Property("distributivity", "antichain-lattice", "antichains", 3, _distributivity),
    Property("order-compatibility", "antichain-lattice", "antichains", 2, _order_compatibility),
    Property("antichain-bounds", "antichain-lattice", "none", 0, _antichain_bounds),
    Property("filter-bijection", "antichain-lattice", "antichains", 1, _filter_bijection),
    Property("filters-injective", "antichain-lattice", "none", 0, _filters_injective),
    Property("partition", "blocker-maps", "subsets", 1, _partition),
    Property("nonemptiness", "blocker-maps", "nz_subsets", 1, _nonemptiness),
    Property("min-reduction", "blocker-maps", "nz_subsets", 1, _min_reduction),
    Property("factorization", "blocker-maps", "nz_subsets", 1, _factorization),
    Property("formula-equivalence", "blocker-maps", "nz_subsets", 1, _formula_equivalence),
    Property("filter-ideal-structure", "blocker-maps", "subsets", 1, _filter_ideal_structure),
    Property("antitonicity", "blocker-maps", "antichains", 2, _antitonicity),
    Property("reciprocity", "blocker-maps", "antichains", 1, _reciprocity),
    Property("involution", "blocker-maps", "antichains", 1, _involution),
    Property("double-form-fixed-points", "blocker-maps", "antichains", 1, _double_form),
    Property("preimage-join-closed", "blocker-maps", "antichains", 2, _preimage_join_closed),
    Property("preimage-greatest", "blocker-maps", "antichains", 1, _preimage_greatest),
    Property("meet-closed", "blocker-maps", "antichains", 2, _meet_closed),
    Property("self-duality", "blocker-maps", "antichains", 2, _self_duality),
    Property("image-bounds-atom-coatom", "blocker-maps", "none", 0, _image_bounds),
    Property("join-formula-lub", "blocker-maps", "antichains", 2, _join_formula),
    Property("gamma-isomorphism", "blocker-maps", "antichains", 2, _gamma_isomorphism),
]

PROPERTY_BY_NAME = {prop.name: prop for prop in PROPERTIES}


# runner --------------------------------------------------------------------------------

@dataclass
class Counterexample:
    suite: str
    poset: Optional[Poset] = None
    args: tuple = ()
    note: str = ""

    def describe(self) -> str:
        lines = [f"counterexample for {self.suite}:"]
        if self.poset is not None:
            for line in format_poset(self.poset).splitlines():
                lines.append(f"  {line}")
            for i, X in enumerate(self.args, 1):
                lines.append(f"  arg{i}: {format_antichain(self.poset, X)}")
        if self.note:
            lines.append(f"  {self.note}")
        return "\n".join(lines)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failure: Optional[Counterexample] = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self, timing: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.checks} checks"
        return out + f" ({self.seconds:.2f}s)" if timing else out


def _argument_tuples(prop: Property, ctx: Context, max_triples: int, seed: int):
    if prop.arity == 0:
        yield ()
        return
    dom = ctx.domain(prop.domain)
    if prop.arity == 3 and len(dom) ** 3 > max_triples:
        rng = SplitMix64(seed)
        for _ in range(max_triples):
            yield tuple(rng.choice(dom) for _ in range(3))
        return
    yield from product(dom, repeat=prop.arity)


def _fails(prop: Property, ctx: Context, args) -> bool:
    try:
        return not prop.check(ctx, *args)
    except Exception:
        return True


def shrink(prop: Property, poset: Poset, args: tuple, beta: BlockerFn = blocker) -> tuple:
    """Greedily drop argument elements, then poset middles, while the failure persists."""
    args = tuple(tuple(a) for a in args)
    ctx = Context(poset, beta)
    progress = True
    while progress:
        progress = False
        for i, X in enumerate(args):
            for e in X:
                Y = tuple(x for x in X if x != e)
                if not ctx.admissible(prop.domain, Y):
                    continue
                cand = args[:i] + (Y,) + args[i + 1:]
                if _fails(prop, ctx, cand):
                    args, progress = cand, True
                    break
            if progress:
                break
        if progress:
            continue
        p = ctx.poset
        for x in range(p.n):
            if x in (p.zero, p.one):
                continue
            sub, remap = induced_subposet(p, [y for y in range(p.n) if y != x])
            cand = tuple(tuple(sorted(remap[y] for y in X if y in remap)) for X in args)
            sub_ctx = Context(sub, beta)
            if not all(sub_ctx.admissible(prop.domain, X) for X in cand):
                continue
            if _fails(prop, sub_ctx, cand):
                ctx, args, progress = sub_ctx, cand, True
                break
    return ctx.poset, args


def check_property(prop: Property, posets: Iterable[Poset], beta: BlockerFn = blocker,
                   max_triples: int = 2000, seed: int = 0,
                   contexts: Optional[dict] = None) -> SuiteResult:
    result = SuiteResult(prop.name)
    start = time.perf_counter()
    for k, p in enumerate(posets):
        ctx = contexts.setdefault(id(p), Context(p, beta)) if contexts is not None else Context(p, beta)
        for args in _argument_tuples(prop, ctx, max_triples, seed + k):
            result.checks += 1
            if _fails(prop, ctx, args):
                small_p, small_args = shrink(prop, p, args, beta)
                result.failure = Counterexample(prop.name, small_p, small_args)
                result.seconds = time.perf_counter() - start
                return result
    result.seconds = time.perf_counter() - start
    return result


# clutter, product and map suites ----------------------------------------------------------

def all_clutters(n: int) -> list:
    """Every Sperner family over ``{1..n}``, found by brute force over families."""
    subsets = [frozenset(s) for size in range(n + 1)
               for s in combinations(range(1, n + 1), size)]
    out = []
    for bits in range(1 << len(subsets)):
        family = [subsets[i] for i in range(len(subsets)) if bits >> i & 1]
        if all(not (s < t) for s in family for t in family):
            out.append(Clutter(n, family))
    return out


def clutter_suites(sampled: Iterable[Clutter], beta: BlockerFn = blocker,
                   seed: int = 0) -> list:
    exhaustive = [G for n in range(1, 4) for G in all_clutters(n)]
    sampled = list(sampled)
    results = []

    r = SuiteResult("double-blocker")
    t = time.perf_counter()
    for G in exhaustive + sampled:
        r.checks += 1
        if clutter_blocker(clutter_blocker(G)) != G:
            r.failure = Counterexample(r.name, note=f"clutter {G} over ground {G.ground_size}")
            break
    r.seconds = time.perf_counter() - t
    results.append(r)

    r = SuiteResult("sperner-reduction")
    t = time.perf_counter()
    rng = SplitMix64(seed)
    for _ in range(300):
        n = 1 + rng.below(4)
        fam = [frozenset(from_mask(rng.below(1 << n))) for _ in range(1 + rng.below(6))]
        fam = [frozenset(e + 1 for e in s) for s in fam]
        ground = range(1, n + 1)
        r.checks += 1
        if family_blocker(ground, fam) != family_blocker(ground, minimal_members(fam)):
            r.failure = Counterexample(r.name, note=f"family {[sorted(s) for s in fam]}")
            break
    r.seconds = time.perf_counter() - t
    results.append(r)

    r = SuiteResult("boolean-bridge")
    t = time.perf_counter()
    lattices = {n: boolean_lattice(n) for n in range(1, 5)}
    for G in exhaustive + sampled:
        L = lattices[G.ground_size]
        r.checks += 1
        via_clutter = clutter_to_antichain(clutter_blocker(G))
        via_poset = tuple(sorted(set(beta(L, clutter_to_antichain(G)))))
        if via_clutter != via_poset or antichain_to_clutter(G.ground_size, clutter_to_antichain(G)) != G:
            r.failure = Counterexample(r.name, L, (clutter_to_antichain(G),),
                                       note=f"clutter {G}")
            break
    r.seconds = time.perf_counter() - t
    results.append(r)
    return results


PRODUCT_FACTORS = ("C3", "C4", "B2", "N5", "M3")


def _factor_pool() -> dict:
    cat = catalog_by_name()
    return {name: cat[name] for name in PRODUCT_FACTORS}


def reduced_product_suite(max_subset_checks: int = 1 << 12) -> SuiteResult:
    r = SuiteResult("reduced-product")
    t = time.perf_counter()
    pool = _factor_pool()
    for (n1, p1), (n2, p2) in product(pool.items(), repeat=2):
        q = reduced_bounded_product(p1, p2)
        expected_atoms = {q.product.encode(a, b) for a in p1.atoms for b in p2.atoms}
        r.checks += 1
        if set(q.atoms) != expected_atoms:
            r.failure = Counterexample(r.name, q, note=f"atom law fails for {n1} * {n2}")
            break
        middles = [x for x in range(q.n) if x not in (q.zero, q.one)]
        for bits in range(1, min(1 << len(middles), max_subset_checks + 1)):
            A = frozenset(middles[i] for i in range(len(middles)) if bits >> i & 1)
            r.checks += 1
            I, lo = intersecters_reduced_product(p1, p2, A, q)
            direct = intersecters(q, A)
            A1 = {q.product.coords[a][0] for a in A}
            A2 = {q.product.coords[a][1] for a in A}
            case_two = (extremes(p1, intersecters(p1, A1), "min") != (p1.one,)
                        and extremes(p2, intersecters(p2, A2), "min") != (p2.one,))
            ok = I == direct and lo == extremes(q, direct, "min")
            if ok and case_two:
                factor_min = {(x, y) for x in extremes(p1, intersecters(p1, A1), "min")
                              for y in extremes(p2, intersecters(p2, A2), "min")}
                ok = {q.product.coords[x] for x in lo} == factor_min
            if not ok:
                r.failure = Counterexample(r.name, q, (tuple(sorted(A)),),
                                           note=f"factors {n1} * {n2}")
                r.seconds = time.perf_counter() - t
                return r
    r.seconds = time.perf_counter() - t
    return r


def full_product_suite(exhaustive_subsets_upto: int = 16, samples: int = 300,
                       seed: int = 0) -> SuiteResult:
    """All subsets for small products; all antichains plus random subsets otherwise."""
    r = SuiteResult("full-product")
    t = time.perf_counter()
    pool = _factor_pool()
    rng = SplitMix64(seed)
    for (n1, p1), (n2, p2) in product(pool.items(), repeat=2):
        q = cartesian_product(p1, p2)
        expected_atoms = ({q.product.encode(p1.zero, b) for b in p2.atoms}
                          | {q.product.encode(a, p2.zero) for a in p1.atoms})
        r.checks += 1
        if set(q.atoms) != expected_atoms:
            r.failure = Counterexample(r.name, q, note=f"atom law fails for {n1} x {n2}")
            break
        nonzero = [x for x in range(q.n) if x != q.zero]
        if q.n <= exhaustive_subsets_upto:
            cases = (frozenset(nonzero[i] for i in range(len(nonzero)) if bits >> i & 1)
                     for bits in range(1, 1 << len(nonzero)))
        else:
            ants = [frozenset(A) for A in al.enumerate_antichains(q) if A and q.zero not in A]
            randoms = []
            for _ in range(samples):
                bits = rng.below(1 << len(nonzero)) or 1
                randoms.append(frozenset(nonzero[i] for i in range(len(nonzero)) if bits >> i & 1))
            cases = iter_chain(ants, randoms)
        for A in cases:
            r.checks += 1
            if intersecters_full_product(p1, p2, A, q) != intersecters(q, A):
                r.failure = Counterexample(r.name, q, (tuple(sorted(A)),),
                                           note=f"factors {n1} x {n2}")
                r.seconds = time.perf_counter() - t
                return r
    r.seconds = time.perf_counter() - t
    return r


def map_suite(cases: Iterable) -> SuiteResult:
    r = SuiteResult("order-map-proposition")
    t = time.perf_counter()
    for case in cases:
        r.checks += 1
        if not check_map_proposition(case.map, case.subset):
            m = case.map
            r.failure = Counterexample(
                r.name, m.source, (tuple(sorted(case.subset)),),
                note=f"map {m.source.name}->{m.target.name} image={list(m.image)}")
            break
    r.seconds = time.perf_counter() - t
    return r


def run_all(corpus, beta: BlockerFn = blocker, max_triples: int = 2000,
            properties: Optional[Iterable[Property]] = None, stop_on_failure: bool = False) -> list:
    results = []
    contexts: dict = {}
    for prop in properties if properties is not None else PROPERTIES:
        res = check_property(prop, corpus.posets, beta, max_triples, corpus.seed, contexts)
        results.append(res)
        if stop_on_failure and not res.passed:
            return results
    results.extend(clutter_suites(corpus.clutters, beta, corpus.seed))
    results.append(reduced_product_suite())
    results.append(full_product_suite(seed=corpus.seed))
    results.append(map_suite(corpus.maps))
    return results

