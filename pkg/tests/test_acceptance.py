"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  Criterion 7 carries a
sub-assertion that is mathematically unattainable as stated (two of the four
named family points provably admit no bounded-periodic integral exponent
profile); the test verifies everything that does hold, prints the analysis,
and then fails honestly on the literal statement.  See the decisions ledger
for the full derivation.
"""

import random
import time
from fractions import Fraction as F

import numpy as np
import pytest

from nahm_forge.series import QSeries, eq_to_order
from nahm_forge.products import pf, poch, product
from nahm_forge.nahm import dual_quadruple, nahm_sum, quadruple
from nahm_forge.candidates import DUAL_PAIRS, FAMILIES
from nahm_forge.recognizer import hunt, normalize_and_profile, with_period
from nahm_forge.zlaurent import double_sum_ct
from nahm_forge import modular, registry

from _naive import naive_side


def report(num: int, ok: bool, detail: str):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_exact_identity_suite():
    recs = [r for r in registry.registry() if r.status != "conjecture"]
    t0 = time.time()
    failures = []
    for rec in recs:
        order = 100 if rec.params else 200
        rep = registry.verify(rec.id, order)
        if rep.result != "pass":
            failures.append(rep)
    dt = time.time() - t0
    ok = len(recs) >= 60 and not failures and dt < 120.0
    report(1, ok, f"{len(recs)} theorem/known records at order 200 "
                  f"(param records at 100), {len(failures)} failures, {dt:.1f}s")
    assert len(recs) >= 60
    assert not failures, failures[:3]
    assert dt < 120.0


def test_criterion_2_conjecture_evidence():
    reports = registry.verify_all(300, status_filter="conjecture")
    bad = [r for r in reports if r.result != "conjecture_pass"]
    ww = [r for r in reports if r.id.startswith("conj-WW")]
    ok = not bad and len(ww) == 8
    report(2, ok, f"{len(reports)} conjectural records at order 300 "
                  f"({len(ww)} two-term representations), {len(bad)} mismatches")
    assert len(ww) == 8
    assert not bad, bad[:3]


def test_criterion_3_modular_transformations():
    t0 = time.time()
    worst_dev = 0.0
    worst_tail = 0.0
    checked = 0
    for tau in modular.TAU_DEFAULT:
        for rel in modular.relations():
            rep = modular.check_transformation(rel, tau, tol=1e-9)
            worst_dev = max(worst_dev, rep.max_dev)
            worst_tail = max(worst_tail, rep.tail_bound)
            checked += 1
            assert rep.passed, (rel, tau, rep)
    dt = time.time() - t0
    ok = worst_dev < 1e-9 and worst_tail < 1e-12 and dt < 10.0
    report(3, ok, f"{checked} relation checks at 5 sample points: "
                  f"max dev {worst_dev:.2e}, max tail {worst_tail:.2e}, {dt:.1f}s")
    assert worst_dev < 1e-9
    assert worst_tail < 1e-12
    assert dt < 10.0


def test_criterion_4_matrix_identities():
    wtw = modular.wtw_deviation()
    dbl = modular.double_inversion_deviation()
    alphas = [modular.alpha(k) for k in (1, 2, 3)]
    targets = [0.23192, 0.41791, 0.52112]
    ok = wtw < 1e-12 and dbl < 1e-12 and \
        all(abs(a - t) < 5e-6 for a, t in zip(alphas, targets))
    report(4, ok, f"W^T W dev {wtw:.2e}, double-inversion dev {dbl:.2e}, "
                  f"alphas {['%.5f' % a for a in alphas]}")
    assert ok


def test_criterion_5_oracle_equivalence():
    rng = random.Random(20250810)
    backed = [r for r in registry.registry() if r.lhs_data is not None]
    sample = rng.sample(backed, 20)
    bad = []
    for rec in sample:
        want_l = naive_side(rec.lhs_data, 20)
        want_r = naive_side(rec.rhs_data, 20)
        got_l = rec.lhs(F(20))
        got_r = rec.rhs(F(20))
        ok = (want_l == want_r
              and {F(k, got_l.den): F(v) for k, v in got_l.coeffs.items()} == want_l
              and {F(k, got_r.den): F(v) for k, v in got_r.coeffs.items()} == want_r)
        if not ok:
            bad.append(rec.id)
    report(5, not bad, f"20 seeded-random records recomputed naively to order 20; "
                       f"disagreements: {bad}")
    assert not bad


def test_criterion_6_duality():
    for fam in FAMILIES:
        for quad in fam.quadruples(c=F(-1, 24)):
            assert dual_quadruple(dual_quadruple(quad)) == quad
    mismatches = []
    for left, right in DUAL_PAIRS:
        for b_left, b_right in zip(left.bs, right.bs):
            dq = dual_quadruple(quadruple(left.A, b_left, 0, left.d))
            target = quadruple(right.A, b_right, 0, right.d)
            if dq.A != target.A or dq.b != target.b or dq.d != target.d:
                mismatches.append((left.index, b_left))
    report(6, not mismatches,
           f"involution exact on 14 families; printed dual data matched for "
           f"{sum(len(l.bs) for l, _ in DUAL_PAIRS)} offset vectors "
           f"across 7 dual pairs; mismatches: {mismatches}")
    assert not mismatches


def test_criterion_7_hunt_rediscovery():
    A = ((2, 1), (2, 2))
    d = (1, 2)
    grid = [(F(x, 2), F(y)) for x in range(-4, 5) for y in range(-2, 5)]
    hits = hunt(A, d, grid, order=121, max_n=120)
    hit_bs = {h.b for h in hits}

    # (a) reported set == the set of grid points with bounded periodic
    #     integral profiles (recomputed point by point)
    expected = set()
    for b in grid:
        s = nahm_sum(quadruple(A, b, 0, d), 121).reduce()
        if s.is_zero():
            continue
        prof = normalize_and_profile(s, 120)
        if prof.is_integral() and prof.is_bounded(4) and \
                with_period(prof).period is not None:
            expected.add(tuple(F(x) for x in b))
    exact_ok = hit_bs == expected

    # (b) each hit's profile reproduces its own series to order 120
    roundtrip_ok = True
    for h in hits:
        s = nahm_sum(quadruple(A, h.b, 0, d), 121).reduce()
        if h.profile.substitution > 1:
            s = s.power_substitute(h.profile.substitution)
        rebuilt = h.profile.rebuild(120)
        n = min(rebuilt.order, s.order, F(120))
        if eq_to_order(rebuilt.truncate(n), s.truncate(n), n) is not None:
            roundtrip_ok = False

    # (c) family membership as literally stated: a in {0, 1, 2, 3}
    family = {(F(a - 3, 2), F(a)): a for a in range(4)}
    present = {a for b, a in family.items() if b in hit_bs}
    missing = sorted(set(range(4)) - present)

    # (d) for the family points that are hits, the rebuilt profile equals the
    #     published product form to order 120
    family_product_ok = True
    for b, a in family.items():
        if b not in hit_bs:
            continue
        h = next(x for x in hits if x.b == b)
        sub = h.profile.substitution
        rebuilt = h.profile.rebuild(120)
        tri = QSeries({0: 1}, 1, 130) + \
            QSeries.monomial(F(a + 1, 2) * sub, 1, 130) + \
            QSeries.monomial(F(a - 1, 2) * sub, 1, 130)
        target = tri * poch(pf(-1, F(a + 3, 2) * sub, sub), 130)
        n = min(rebuilt.order, target.order, F(120))
        if eq_to_order(rebuilt.truncate(n), target.truncate(n), n) is not None:
            family_product_ok = False

    ok = exact_ok and roundtrip_ok and family_product_ok and not missing
    report(7, ok,
           f"{len(hits)} hits on the 63-point grid; exact hit set: {exact_ok}; "
           f"profile roundtrips to order 120: {roundtrip_ok}; "
           f"family points found: a in {sorted(present)}, missing: {missing} "
           f"(the a=1 and a=2 points provably admit no bounded-periodic "
           f"integral profile; see the decisions ledger)")
    assert exact_ok
    assert roundtrip_ok
    assert family_product_ok
    assert not missing, (
        f"family points a={missing} are not product-form hits: for a=1 the "
        f"unit-normalized series has coefficient 1/2 at q^2 (no integral "
        f"profile), for a=2 the trinomial factor 1+q+q^3 has a zero inside "
        f"the unit disk (unbounded exponents); the published identity holds "
        f"for every a but the searched product form exists only for the "
        f"cyclotomic cases a=0 and a=3")


def test_criterion_8_constant_term_route():
    cases = [(0, 0, (0, 0), "exam4-1-split"),
             (-1, 2, (-1, 2), "exam4-2-split"),
             (1, 0, (1, 0), "exam4-3-split")]
    ok = True
    for u, v, b, split_id in cases:
        ct = double_sum_ct(u, v, 60)
        direct = nahm_sum(quadruple([[2, -1], [-2, 2]], b, 0, [1, 2]), 60)
        split = registry.get(split_id).rhs(F(60))
        if eq_to_order(ct, direct, 60) is not None or \
           eq_to_order(ct, split, 60) is not None:
            ok = False
    report(8, ok, "3 integrand constant terms equal the double sums and "
                  "their two single-sum splits to order 60")
    assert ok
