"""Acceptance criteria 1-9.

Each test prints one ``criterion N: PASS|FAIL`` line (also collected into the
terminal summary) and then asserts the criterion, so a red line is a failed test.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from distough.distance import distance_matrix
from distough.extremal import (
    FamilyParams,
    build_family,
    eval_P_Rdelta,
    eval_P_Rsdelta,
    eval_P_Rtaus,
    quotient_Rdelta,
    quotient_Rsdelta,
    quotient_Rtaus,
)
from distough.generate import nonisomorphic_graphs
from distough.graph import is_connected
from distough.inequalities import proof_inequality_suite, thm1_min_order
from distough.poly import Polynomial, largest_real_root
from distough.spectral import spectral_radius
from distough.toughness import tau_toughness
from distough.verify import cmd_search_counterexample, lemma_bounds, lemma_composition, lemma_edge_deletion, lemma_quotient

pytestmark = pytest.mark.acceptance


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_closed_form_polynomials():
    rng = random.Random(2024)
    start = time.perf_counter()
    mismatches = 0
    for _ in range(200):
        d = rng.randint(2, 9)
        s = rng.randint(1, d - 1)
        n = thm1_min_order(d) + rng.randint(0, 150)
        mismatches += eval_P_Rdelta(n, d) != quotient_Rdelta(n, d).char_poly()
        mismatches += eval_P_Rsdelta(n, s, d) != quotient_Rsdelta(n, s, d).char_poly()
        b, k = rng.randint(1, 6), rng.randint(1, 6)
        m = k + k * b + 2 + rng.randint(0, 150)
        num = rng.choice((1, 1, 2, 3))
        mismatches += eval_P_Rtaus(m, b, k, tau_num=num) != quotient_Rtaus(m, b, k, tau_num=num).char_poly()
    elapsed = time.perf_counter() - start
    report(1, mismatches == 0 and elapsed < 5, f"600 exact comparisons, {mismatches} mismatches, {elapsed:.2f}s < 5s")


def test_criterion_2_quotient_radius_agreement():
    start = time.perf_counter()
    rep = lemma_quotient(max_order=30)
    elapsed = time.perf_counter() - start
    ok = rep.ok and rep.checked >= 50 and -rep.worst_margin <= 1e-8 and elapsed < 30
    report(2, ok, f"{rep.checked} family graphs, max gap {-rep.worst_margin:.2e} <= 1e-8, {elapsed:.1f}s < 30s")


def test_criterion_3_edge_deletion_monotone():
    connected = sum(1 for g in nonisomorphic_graphs(6) if is_connected(g))
    rep = lemma_edge_deletion(n=6)
    ok = connected == 112 and rep.ok and rep.violations == 0 and rep.worst_margin > 1e-9
    report(3, ok, f"{connected} connected graphs, {rep.checked} deletions, min increase {rep.worst_margin:.3e}")


def test_criterion_4_wiener_sandwich():
    lo, hi = lemma_bounds(count=1000, max_order=9, seed=0)
    ok = lo.ok and hi.ok and lo.checked >= 1000 and lo.worst_margin >= -1e-9
    report(4, ok, f"{lo.checked} graphs, lower slack {lo.worst_margin:.2e}, {lo.violations + hi.violations} violations")


def test_criterion_5_composition_ordering():
    start = time.perf_counter()
    le3 = lemma_composition((1,), max_s=3, max_c=4, max_order=12, name="le3")
    le4 = lemma_composition((1, 2), max_s=3, max_c=4, max_order=12, large_part=True, name="le4")
    elapsed = time.perf_counter() - start
    ok = le3.ok and le4.ok and elapsed < 120
    detail = f"{le3.checked} + {le4.checked} compositions, min gap {min(le3.worst_margin, le4.worst_margin):.2e}, {elapsed:.1f}s < 120s"
    report(5, ok, detail)


def test_criterion_6_exceptional_toughness():
    t1 = tau_toughness(build_family(FamilyParams("thm1-star", n=12, delta=2))).value
    t2 = tau_toughness(build_family(FamilyParams("thm2-star", n=12, tau_num=3))).value
    b = 2
    t3 = tau_toughness(build_family(FamilyParams("thm3-star", n=10, tau_den=b))).value
    ok = t1 == Fraction(2, 3) and t2 == 3 - 1 and t3 == Fraction(1, b + 1)
    report(6, ok, f"tau values {t1}, {t2}, {t3}; expected 2/3, 2, 1/{b + 1}")


def test_criterion_7_quotient_instance():
    p = quotient_Rdelta(18, 2).char_poly()
    want = Polynomial.from_descending([1, -17, -124, -28])
    root = largest_real_root(p)
    full = spectral_radius(distance_matrix(build_family(FamilyParams("thm1-star", n=18, delta=2)))).lambda1
    ok = p == want and abs(root - full) <= 1e-8
    report(7, ok, f"{p}; quotient root {root:.10f}, full eigensolve {full:.10f}")


def test_criterion_8_inequality_sweeps():
    start = time.perf_counter()
    reports = [proof_inequality_suite(t) for t in (1, 2, 3)]
    elapsed = time.perf_counter() - start
    bad = [(r.theorem, c.name, c.violations, c.first_violations[0]) for r in reports for c in r.violated()]
    checked = sum(c.checked for r in reports for c in r.results)
    ok = not bad and elapsed < 60 and all(r.complete for r in reports)
    detail = f"{checked} evaluations, {elapsed:.1f}s < 60s, violated: " + ("none" if not bad else "; ".join(f"thm{t} {n} x{v} first at {pt}" for t, n, v, pt in bad))
    report(8, ok, detail)


@pytest.mark.parametrize("theorem, param", [(1, 2), (2, 2), (3, 1), (3, 2)])
def test_criterion_9_random_search(theorem, param):
    rep = cmd_search_counterexample(theorem, "random", param=param, samples=10_000, seed=theorem)
    accounted = rep.exceptional + rep.verified + rep.spectral_only == rep.premise_true
    ok = rep.sampled == 10_000 and rep.not_applicable == 0 and not rep.violations and accounted
    detail = (
        f"theorem {theorem} param {param} n={rep.n}: {rep.sampled} samples, {rep.premise_true} premise true, "
        f"{rep.verified} verified, {rep.exceptional} exceptional, {rep.spectral_only} spectral-only, {len(rep.violations)} violations"
    )
    report(9, ok, detail)
