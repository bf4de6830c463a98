"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (shown even without
``-s``) and then asserts.  Every numeric comparison is exact rational
arithmetic: the tolerance is pinned at zero.  Runtime budgets are part of the
pass condition and are printed next to the measured time.
"""
import random
from itertools import combinations
import time
from fractions import Fraction

import pytest

from flowerkit import constructions as cons
from flowerkit.checks import C_GRID, check_closed_forms, check_ratio_implication, check_stability
from flowerkit.core import SetFamily, binom, canonical_form, mask_of
from flowerkit.flower import (
    base_cardinality_bounds, find_flower, flower_base, inheritance_check,
)
from flowerkit.ratlp import verify_baby_lemma
from flowerkit.search import enumerate_designs, exhaustive_max_dC, verify_folklore

from oracles import random_intersecting

TOLERANCE = Fraction(0)


@pytest.fixture
def verdict(capsys):
    def say(k, title, ok, detail, elapsed, budget):
        ok = ok and elapsed < budget
        tag = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"\n[{tag}] criterion {k:>2}: {title}: {detail} "
                  f"(tolerance {TOLERANCE}, {elapsed:.1f}s of {budget}s)")
        return ok
    return say


def test_c01_closed_form_exactness(verdict):
    t = time.perf_counter()
    rep = check_closed_forms(Cs=C_GRID)
    el = time.perf_counter() - t
    assert len(C_GRID) == 20
    detail = (f"{rep['cases']} cases, {rep['mismatches']} mismatches "
              f"({rep['unexplained']} not explained by a heavier outside vertex)")
    if rep["failures"]:
        shown = sorted({(f["kind"], f["n"], f["r"]) for f in rep["failures"]})
        detail += "; failing (kind, n, r): " + ", ".join(f"{k}({n},{r})" for k, n, r in shown)
    assert verdict(1, "closed-form d_C of a_k, a_f, a_f_plus, design_family(p=3)",
                   rep["passed"], detail, el, 60)


def test_c02_hilton_milner_base(verdict):
    t = time.perf_counter()
    expect = [[1, 2], [1, 3], [1, 4], [2, 3, 4]]
    got = {n: [b.set.to_list() for b in flower_base(cons.hilton_milner(n, 3), 3).members]
           for n in range(9, 15)}
    el = time.perf_counter() - t
    ok = all(v == expect for v in got.values())
    assert verdict(2, "flower base of hilton_milner(n,3), alpha=3, n in [9,14]", ok,
                   f"bases {'all equal' if ok else 'differ'}: {expect}", el, 10)


def test_c03_flower_lemma_sharpness(verdict):
    t = time.perf_counter()
    ok = True
    notes = []
    for alpha, r in [(2, 2), (2, 3), (3, 2)]:
        F = cons.flower_sharpness(alpha, r)
        present = set(F.masks)
        flower_free = find_flower(F, alpha) is None
        others = [m for m in map(mask_of, combinations(range(1, F.n + 1), r)) if m not in present]
        extended = 0
        for m in others:
            fl = find_flower(SetFamily(F.n, [*F.masks, m], r), alpha)
            extended += fl is not None and fl.is_valid()
        ok &= len(F) == alpha ** r and flower_free and extended == len(others)
        notes.append(f"({alpha},{r}): |F|={len(F)}, flower-free={flower_free}, "
                     f"{extended}/{len(others)} one-edge extensions have a flower")
    el = time.perf_counter() - t
    assert verdict(3, "flower lemma sharpness", ok, "; ".join(notes), el, 60)


def test_c04_inheritance_suite(verdict):
    t = time.perf_counter()
    rng = random.Random(20240601)
    failures = []
    for i in range(1000):
        n = rng.randint(2, 12)
        r = rng.randint(1, min(4, n))
        F = random_intersecting(rng, n, r, tries=rng.randint(1, 60))
        alpha = r + rng.randint(0, 1)
        B = flower_base(F, alpha)
        rep = inheritance_check(F, B)
        bounds_ok = all(len(F) <= b for k in range(1, r + 1)
                        for b in base_cardinality_bounds(F, B, k))
        if not (rep.passed and bounds_ok):
            failures.append((i, n, r, F.to_lists()))
    el = time.perf_counter() - t
    assert verdict(4, "inheritance clauses and counting bounds on 1000 random families",
                   not failures, f"{len(failures)} failures", el, 300)


def test_c05_folklore(verdict):
    t = time.perf_counter()
    r7 = verify_folklore(7)
    t7 = time.perf_counter() - t
    r8 = verify_folklore(8)
    el = time.perf_counter() - t
    ok = r7.max_edges == 10 and r7.max_span == 7 and r8.max_span == 7
    detail = (f"n0=7: max_edges={r7.max_edges}, max_span={r7.max_span} "
              f"({r7.count} tau=3 maximal families, {t7:.1f}s); "
              f"n0=8: max_span={r8.max_span}, max_edges={r8.max_edges} "
              f"({r8.count} families, {el - t7:.1f}s)")
    assert verdict(5, "tau=3 triple systems have at most 10 edges and span 7", ok, detail, el, 600)


def test_c06_fano_uniqueness(verdict):
    t = time.perf_counter()
    ds = enumerate_designs(7, 3, 1)
    forms = {canonical_form(d) for d in ds}
    el = time.perf_counter() - t
    ok = len(ds) == 30 and forms == {canonical_form(cons.fano())}
    assert verdict(6, "labelled (7,3,1)-designs", ok,
                   f"{len(ds)} designs, {len(forms)} isomorphism class(es)", el, 60)


def test_c07_baby_lemma(verdict):
    t = time.perf_counter()
    Cs = [Fraction(3, 2), Fraction(8, 5), Fraction(7, 4), Fraction(2), Fraction(9, 4),
          Fraction(7, 3) - Fraction(1, 100)]
    notes, ok = [], True
    for C in Cs:
        rep = verify_baby_lemma(C)
        fano_opt = [e.optimum for e in rep.entries if e.is_fano]
        worst = max(e.margin for e in rep.entries if not e.is_fano and e.optimum is not None)
        ok &= rep.passed
        notes.append(f"C={C}: fano {fano_opt[0]} vs {6 - 3 * C}, worst other margin {worst}")
    el = time.perf_counter() - t
    assert verdict(7, "density LP over the 7-vertex tau=3 catalog", ok, "; ".join(notes), el, 300)


def _oracle_instances():
    for n in range(1, 21):
        for r in range(1, n + 1):
            if binom(n, r) <= 20:
                yield n, r


def test_c08_search_oracle_equivalence(verdict):
    t = time.perf_counter()
    Cs = [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(2)]
    mism = []
    count = 0
    for n, r in _oracle_instances():
        for C in Cs:
            a = exhaustive_max_dC(n, r, C)
            b = exhaustive_max_dC(n, r, C, prune=False)
            count += 1
            if a.best_value != b.best_value or not (a.verify(C) and b.verify(C)):
                mism.append((n, r, C))
    tri = exhaustive_max_dC(5, 2, 1)
    empty = exhaustive_max_dC(5, 2, 2)
    el = time.perf_counter() - t
    ok = (not mism and tri.best_value == 1 and tri.witness.to_lists() == [[1, 2], [1, 3], [2, 3]]
          and empty.best_value == 0 and len(empty.witness) == 0)
    detail = (f"{count} (n,r,C) instances, {len(mism)} disagreements; (5,2,1) -> "
              f"{tri.best_value} {tri.witness.to_lists()}; (5,2,2) -> {empty.best_value} "
              f"with {len(empty.witness)} edges")
    assert verdict(8, "pruned search equals full enumeration", ok, detail, el, 120)


def test_c09_stability(verdict):
    t = time.perf_counter()
    rep = check_stability(12, 4, 3, samples=200, seed=7)
    el = time.perf_counter() - t
    ekr = rep["ekr_degree_family"]
    detail = (f"ekr_degree_family(12,4,3): {ekr['size']} edges, diversity {ekr['diversity']}; "
              f"{len(rep['violations'])} violations of distance <= 3t over {rep['samples']} "
              f"subfamilies (t in [{rep['t_min']}, {rep['t_max']}])")
    assert verdict(9, "stability spot checks", rep["passed"], detail, el, 120)


def test_c10_ratio_implication(verdict):
    t = time.perf_counter()
    rep = check_ratio_implication()
    el = time.perf_counter() - t
    bad = rep["literal_violations"]
    detail = f"{rep['checked']} (family, eps) checks, {len(bad)} violations"
    if bad:
        detail += "; e.g. " + ", ".join(
            f"{v['family']} n={v['n']} r={v['r']} eps={v['eps']}: ratio {v['ratio']} < {v['floor']}"
            for v in bad[:3])
    detail += f"; under the bound d_C <= (7-3C)C(n-3,r-3): {len(rep['bounded_violations'])} violations"
    assert verdict(10, "d_C >= d_C(a_f) forces degree ratio >= (3C-6)/C", rep["passed"],
                   detail, el, 30)
