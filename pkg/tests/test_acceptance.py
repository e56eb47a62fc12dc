"""Acceptance criteria, each run at its stated size and time limit.

Every test appends one ``criterion N: PASS|FAIL`` line that is echoed in the
terminal summary.
"""
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from posetblockers.antichains import enumerate_antichains
from posetblockers.blockers import (
    blocker,
    blocker_image,
    intersecters,
    intersecters_by_clutter_formula,
    intersecters_by_filter_formula,
)
from posetblockers.generate import build_corpus, catalog, random_clutter
from posetblockers.verify import (
    PROPERTY_BY_NAME,
    check_property,
    clutter_suites,
    full_product_suite,
    map_suite,
    reduced_product_suite,
)

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(number, limit, what):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            detail = f" (took {elapsed:.1f}s, limit {limit}s)"
            raise AssertionError(f"criterion {number} exceeded {limit}s: {elapsed:.1f}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        bound = f" < {limit}s" if limit is not None else ""
        ACCEPTANCE_LINES.append(f"criterion {number}: {status} {what} [{elapsed:.1f}s{bound}]{detail}")


@pytest.fixture(scope="module")
def corpus():
    return build_corpus()


def run_properties(names, posets):
    failures = []
    for name in names:
        res = check_property(PROPERTY_BY_NAME[name], posets)
        assert res.checks > 0
        if not res.passed:
            failures.append(res.failure.describe())
    return failures


def test_criterion_1_formula_equivalence():
    with criterion(1, 5, "three intersecter computations agree on the catalog"):
        checked = 0
        for p in catalog():
            m = oracles.matrix_of(p)
            for A in enumerate_antichains(p):
                if not A or p.zero in A:
                    continue
                direct = intersecters(p, A)
                assert intersecters_by_filter_formula(p, A) == direct, (p.name, A)
                assert intersecters_by_clutter_formula(p, A) == direct, (p.name, A)
                assert direct == oracles.intersecters(m, A), (p.name, A)
                checked += 1
        assert checked > 0


def test_criterion_2_involution(corpus):
    with criterion(2, 30, f"involution on the blocker image of {len(corpus.posets)} posets"):
        assert len(corpus.posets) >= len(catalog()) + 200
        assert all(p.n <= 8 for p in corpus.posets[len(catalog()):])
        for p in corpus.posets:
            m = oracles.matrix_of(p)
            image = {tuple(sorted(oracles.minimal(m, oracles.intersecters(m, A))))
                     for A in oracles.antichains(m)}
            assert image == set(blocker_image(p).blockers), p.name
            for B in image:
                assert blocker(p, blocker(p, B)) == B, (p.name, B)


def test_criterion_3_image_structure(corpus):
    names = ["meet-closed", "self-duality", "image-bounds-atom-coatom", "join-formula-lub"]
    with criterion(3, 60, "blocker image is a self-dual lattice with the stated bounds"):
        assert run_properties(names, corpus.posets) == []


def test_criterion_4_preimage_law(corpus):
    with criterion(4, 60, "preimages are join-closed with greatest element the double blocker"):
        assert run_properties(["preimage-join-closed", "preimage-greatest"], corpus.posets) == []


def test_criterion_5_antitone_and_reciprocal(corpus):
    with criterion(5, 30, "blocker is antitone and reciprocal"):
        assert run_properties(["antitonicity", "reciprocity"], corpus.posets) == []


def test_criterion_6_products():
    with criterion(6, 60, "product formulas agree with direct intersecters"):
        reduced = reduced_product_suite()
        full = full_product_suite()
        assert reduced.passed, reduced.failure and reduced.failure.describe()
        assert full.passed, full.failure and full.failure.describe()


def test_criterion_7_boolean_bridge():
    with criterion(7, 30, "clutter blocker is involutive and matches the lattice blocker"):
        sampled = [random_clutter(4, seed) for seed in range(100)]
        results = clutter_suites(sampled)
        assert [r.name for r in results if not r.passed] == []
        # exhaustive n <= 3 holds 3 + 6 + 20 clutters
        assert results[0].checks == 29 + 100


def test_criterion_8_order_maps(corpus):
    with criterion(8, 10, "order-preserving maps carry intersecters into intersecters"):
        assert len(corpus.maps) == 100
        res = map_suite(corpus.maps)
        assert res.passed and res.checks == 100


def test_criterion_9_desk_numbers(cat):
    with criterion(9, None, "B2 and N5 counts and blockers"):
        b2, n5 = cat["B2"], cat["N5"]
        for p in (b2, n5):
            # recomputed from the brute-force oracle before comparing
            m = oracles.matrix_of(p)
            assert len(oracles.antichains(m)) == len(enumerate_antichains(p))
        assert len(enumerate_antichains(b2)) == 6
        assert len(blocker_image(b2).blockers) == 6
        img = blocker_image(n5)
        assert len(enumerate_antichains(n5)) == 8
        x, y, z = (n5.id_of(s) for s in "xyz")
        assert set(img.blockers) == {(), (n5.zero,), (x,), (y,), (x, y), (n5.one,)}
        assert set(img.preimages[(x,)]) == {(x,), (z,)}


def test_criterion_10_verify_cli():
    with criterion(10, 120, "verify exits 0 by default and 3 with a counterexample under a fault"):
        ok = subprocess.run([sys.executable, "-m", "posetblockers.cli", "verify"],
                            capture_output=True, text=True)
        assert ok.returncode == 0, ok.stdout + ok.stderr
        assert ok.stdout.splitlines()[-1] == "all properties hold"
        bad = subprocess.run([sys.executable, "-m", "posetblockers.cli", "verify",
                              "--inject-fault", "skip-min"], capture_output=True, text=True)
        assert bad.returncode == 3
        assert "counterexample for involution:" in bad.stdout
        assert "  elements: 0 1\n  covers: 0<1\n  arg1: -" in bad.stdout
