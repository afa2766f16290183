"""Acceptance suite: one test per criterion, each printing a PASS line.

Every comparison is exact (integer / Laurent-polynomial equality); there are
no numeric tolerances anywhere.  Criterion 11 is asserted in its
hypothesis-respecting form; the strict-xfail twin below records that the
original instance list contains cases outside the hypotheses of the
translation identities, where the identity provably fails.
"""

import random
import time

import pytest

from tiltlab import pcan, sl2
from tiltlab.laurent import ONE, LaurentInt
from tiltlab.sphmod import eta, get_module, mod_iota, phi


def report(num, ok, desc):
    print("ACCEPTANCE %02d: %s -- %s" % (num, "PASS" if ok else "FAIL", desc))
    assert ok, "criterion %d failed: %s" % (num, desc)


# -- pillar B: the quiver laboratory ------------------------------------------------


def test_criterion_01_dual_table():
    from tiltlab.quiverlab import (build_algebra, preset_algebra,
                                   quadratic_dual, renaming_isomorphic)
    star = {"vertices": [1, 2],
            "arrows": [{"name": "bs", "from": 1, "to": 2},
                       {"name": "as", "from": 2, "to": 1}]}
    t0 = time.time()
    ok = True
    pairs = [("R", ["as*bs", "bs*as"]),
             ("R_ab", ["as*bs"]),
             ("R_ab_ba", [])]
    for preset, rels in pairs:
        A = preset_algebra(preset, degree_bound=6)
        target = build_algebra(star, rels, degree_bound=6)
        ok = ok and renaming_isomorphic(quadratic_dual(A), target) is not None
    elapsed = time.time() - t0
    ok = ok and elapsed < 10.0
    report(1, ok, "quadratic dual reproduces all three table rows "
                  "(%.2fs < 10s)" % elapsed)


def test_criterion_02_resolutions():
    from tiltlab.quiverlab import preset_algebra
    from tiltlab.quiverlab.resolutions import simple_resolution
    Rab = preset_algebra("R_ab")
    r1 = simple_resolution(Rab, 1, 4)
    r2 = simple_resolution(Rab, 2, 4)
    ok = (r1.step_summands(0) == [(1, 0)] and
          r1.step_summands(1) == [(2, 1)] and
          r1.step_summands(2) == [] and
          r2.step_summands(0) == [(2, 0)] and
          r2.step_summands(1) == [(1, 1)] and
          r2.step_summands(2) == [(2, 2)] and
          r2.step_summands(3) == [])
    report(2, ok, "minimal resolutions match the two printed sequences "
                  "(lengths 1 and 2, shifts <-1> and <-1>,<-2>)")


def test_criterion_03_yoneda():
    from tiltlab.quiverlab import preset_algebra
    from tiltlab.quiverlab.resolutions import ext_basis, yoneda_product
    ok = True
    for preset, expect_zero in (("R_ab", True), ("R_ab_ba", False)):
        A = preset_algebra(preset, degree_bound=6)
        alpha = ext_basis(A, 1, 2, 1, -1, steps=3)[0]
        beta = ext_basis(A, 2, 1, 1, -1, steps=3)[0]
        ok = ok and yoneda_product(A, beta, alpha).is_zero() == expect_zero
    report(3, ok, "beta*.alpha* vanishes in Ext^2(L1,L1<-2>) for one "
                  "relation and not for two")


def test_criterion_04_qh_detection():
    from tiltlab.quiverlab import preset_algebra, qh_structure
    from tiltlab.quiverlab.modules import injective, is_isomorphic, projective
    Rab = preset_algebra("R_ab")
    S = qh_structure(Rab, [1, 2])
    ok = (S.ok and is_isomorphic(S.standards[2], projective(Rab, 2))
          and is_isomorphic(S.costandards[2], injective(Rab, 2)))
    Rabba = preset_algebra("R_ab_ba")
    for order in ([1, 2], [2, 1]):
        ok = ok and not qh_structure(Rabba, order).ok
    report(4, ok, "quasi-hereditary PASS with std2=P2, costd2=J2; "
                  "FAIL for both orders with two relations")


def test_criterion_05_tilting_ringel():
    from tiltlab.quiverlab import (preset_algebra, qh_structure, ringel_dual,
                                   renaming_isomorphic, tilting_module)
    from tiltlab.quiverlab.modules import is_isomorphic, projective
    Rab = preset_algebra("R_ab")
    S = qh_structure(Rab, [1, 2])
    t2 = tilting_module(Rab, [1, 2], 2, structure=S)
    ok = t2.module.graded_dims() == {(1, -1): 1, (2, 0): 1, (1, 1): 1}
    ok = ok and is_isomorphic(t2.module, projective(Rab, 1, shift=1))
    data = ringel_dual(Rab, [1, 2], structure=S)
    iso = renaming_isomorphic(data.dual, Rab)
    ok = ok and iso is not None and data.dual_qh.ok
    report(5, ok, "T2 = P1<1> with printed graded dims; Ringel dual "
                  "isomorphic to the algebra (explicit map %r)" % (iso,))


def test_criterion_06_koszulity_suite():
    from tiltlab.quiverlab import ext_algebra, koszul_check, preset_algebra
    ok = True
    for preset in ("R", "R_ab", "R_ab_ba", "ext2"):
        A = preset_algebra(preset, degree_bound=8)
        ok = ok and koszul_check(A, 6) == (True, None)
    lam = preset_algebra("ext2", degree_bound=8)
    data = ext_algebra(lam, 6)
    ok = ok and data.diag_dims == [1, 2, 3, 4, 5, 6, 7]
    report(6, ok, "Koszulity PASS for four algebras at K=6; exterior-algebra "
                  "Ext diagonal dims 1..7")


# -- pillar A: Hecke combinatorics ------------------------------------------------


def test_criterion_07_kl_sanity(a2, a3):
    ok = True
    # finite A2: every coefficient is a single power v^(l(y)-l(x))
    W2 = a2.group
    finite2 = [W2.element(w, (0, 0)) for w in range(W2.datum.weyl_order)]
    for y in finite2:
        kl = a2.kl_element(y)
        for x, c in kl.terms.items():
            ok = ok and c == LaurentInt.monomial(y.length - x.length)
    # finite A3: some honestly bigger coefficient polynomial
    W3 = a3.group
    finite3 = [W3.element(w, (0, 0, 0)) for w in range(W3.datum.weyl_order)]
    nontrivial = False
    for y in finite3:
        for x, c in a3.kl_element(y).terms.items():
            if len(c.coeffs) > 1:
                nontrivial = True
    ok = ok and nontrivial
    # cross-check by the independent bar-invariance solver on the full group
    for y in finite3:
        ok = ok and a3.kl_by_bar_solve(y, finite3) == a3.kl_element(y)
    report(7, ok, "A2 coefficients are pure powers; A3 has a nontrivial "
                  "polynomial; bar-solver agrees on all 24 A3 elements")


def test_criterion_08_involution_laws(a1, a2, a1_sph):
    rng = random.Random(2024)
    ok = True
    for alg, bound, samples in ((a1, 8, 60), (a2, 8, 25)):
        els = alg.group.elements_up_to_length(bound)
        # involutivity exhaustively on every basis element of length <= 8
        for w in els:
            h = alg.std(w)
            ok = ok and alg.bar(alg.bar(h)) == h
            ok = ok and alg.iota(alg.iota(h)) == h
        for _ in range(samples):
            h1 = alg.std(rng.choice(els)).scale(
                LaurentInt({rng.randint(-3, 3): rng.randint(-4, 4) or 1}))
            h2 = alg.std(rng.choice(els))
            ok = ok and alg.iota(alg.mul(h1, h2)) == alg.mul(alg.iota(h1), alg.iota(h2))
            ok = ok and alg.bar(alg.mul(h1, h2)) == alg.mul(alg.bar(h1), alg.bar(h2))
    # iota-equivariance of the module isomorphism on 1000 random pairs
    W = a1.group
    els = W.elements_up_to_length(8)
    reps = W.minimal_reps_up_to_length(8)
    asph = get_module(a1, "asph")
    for _ in range(1000):
        m = a1_sph.std(rng.choice(reps)).scale(
            LaurentInt({rng.randint(-2, 2): rng.randint(-3, 3) or 1}))
        h = a1.std(rng.choice(els))
        ok = ok and mod_iota(a1_sph.act(m, h)) == asph.act(mod_iota(m), a1.iota(h))
    report(8, ok, "iota and bar are ring involutions (A1/A2, length <= 8); "
                  "iota(m*h) = iota(m)*iota(h) on 1000 random pairs")


def test_criterion_09_bernstein_suite(a1, a2):
    ok = True
    # A1: additivity over |lambda| <= 3 (each bernstein() call internally
    # asserts independence of the dominant decomposition)
    for lam in range(-3, 4):
        for mu in range(-3, 4):
            prod = a1.mul(a1.bernstein((lam,)), a1.bernstein((mu,)))
            ok = ok and prod == a1.bernstein((lam + mu,))
    # A2: fundamental weights
    fw = [(1, 0), (0, 1)]
    for lam in fw:
        for mu in fw:
            tot = tuple(x + y for x, y in zip(lam, mu))
            ok = ok and a2.mul(a2.bernstein(lam), a2.bernstein(mu)) == a2.bernstein(tot)
    # centrality of W-invariant multisets
    for alg, lam in ((a1, (2,)), (a2, (1, 0)), (a2, (0, 1))):
        theta = alg.theta_char(alg.group.datum.weyl_character_weights(lam))
        gens = [alg.std(s) for s in alg.group.affine_simples]
        gens += [alg.std(om) for om in alg.group.omega_elements]
        for g in gens:
            ok = ok and alg.mul(theta, g) == alg.mul(g, theta)
    report(9, ok, "Bernstein elements: decomposition-independence, "
                  "additivity, centrality (A1 |lam|<=3, A2 fundamentals)")


def test_criterion_10_parabolic_identities(a1, a2):
    ok = True
    for alg, bound in ((a1, 8), (a2, 5)):
        W = alg.group
        sph = get_module(alg, "sph")
        asph = get_module(alg, "asph")
        w0 = W.element(W.datum.longest_index, (0,) * W.datum.rank)
        for w in W.elements_up_to_length(bound):
            pr = asph.project(alg.kl_element(w))
            if W.coset_min_test(w):
                ok = ok and pr == asph.canonical(w)
            else:
                ok = ok and not pr
        for x in W.minimal_reps_up_to_length(bound):
            ok = ok and eta(sph.canonical(x)) == alg.kl_element(W.mul(w0, x))
        # canonical spherical element at w0 x_mu equals M_e . theta(induced)
        mus = [(k,) for k in range(4)] if W.datum.rank == 1 else \
            [(0, 0), (1, 0), (0, 1), (1, 1)]
        Me = sph.std(W.identity)
        for mu in mus:
            xmu = W.longest_double_coset_rep(mu)
            theta = alg.theta_char(W.datum.weyl_character_weights(mu))
            ok = ok and sph.canonical(W.mul(w0, xmu)) == sph.act(Me, theta)
    report(10, ok, "xi- and eta-identities and the convolution lemma at p=0 "
                   "(A1 length <= 8, A2 length <= 5), exact equality")


def test_criterion_11_donkin_steinberg_p0(a1):
    """Hypothesis-respecting form: instances satisfying the propositions'
    hypotheses PASS; the others are faithfully reported HYPOTHESIS_VIOLATED
    with both sides computed (never silently skipped)."""
    W = a1.group
    table = pcan.internal_p0_table(a1, 8, "regular", "A1-affine-ext")
    ts = W.translation((1,))
    w2 = W.weight_to_wlambda((2,))
    ok = True
    for lam in [(1,), (2,)]:
        rep = pcan.verify_donkin(table, lam, ts)
        ok = ok and rep.status == pcan.PASS
        rep = pcan.verify_donkin(table, lam, w2)
        ok = ok and rep.status == pcan.HYPOTHESIS_VIOLATED and rep.lhs and rep.rhs
        for x in (ts, w2):
            rep = pcan.verify_steinberg(table, lam, x)
            ok = ok and rep.status == pcan.HYPOTHESIS_VIOLATED and rep.lhs and rep.rhs
        # the hypothesis-satisfying spherical instance (x = e)
        rep = pcan.verify_steinberg(table, lam, W.identity)
        ok = ok and rep.status == pcan.PASS
    report(11, ok, "Donkin PASS at x=t_sigma, Steinberg PASS at x=e; "
                   "out-of-hypothesis instances reported with both sides")


@pytest.mark.xfail(strict=True, reason="the translation identities carry a "
                   "restrictedness hypothesis; for x = w_{2w} (antispherical) "
                   "and x in {t_sigma, w_{2w}} (spherical) it fails and the "
                   "p=0 identity is provably false (the product side picks "
                   "up an extra canonical summand), so this instance list "
                   "cannot pass as stated")
def test_criterion_11_verbatim_instances(a1):
    W = a1.group
    table = pcan.internal_p0_table(a1, 8, "regular", "A1-affine-ext")
    for lam in [(1,), (2,)]:
        for x in (W.translation((1,)), W.weight_to_wlambda((2,))):
            assert pcan.verify_donkin(table, lam, x).status == pcan.PASS
            assert pcan.verify_steinberg(table, lam, x).status == pcan.PASS


def test_criterion_12_phi_compatibility(a1):
    W = a1.group
    sph = get_module(a1, "sph")
    asph = get_module(a1, "asph")
    ok = True
    for w in W.minimal_reps_up_to_length(4):
        lhs = phi(sph.canonical(w), (1,))
        rhs = asph.canonical(W.mul(W.translation((1,)), w))
        ok = ok and lhs == rhs
    report(12, ok, "phi sends spherical canonical to antispherical "
                   "canonical at t_sigma*w for length <= 4, exactly")


def test_criterion_13_character_formula(a1):
    table = pcan.load_table(pcan.bundled_table_path(
        "a1_affine_p5_antispherical.json"))
    rep = pcan.verify_character_sl2(table, 5, 20)
    ok = rep.status == pcan.PASS
    # the flagged nontrivial case: ch T(13) = chi(13) + chi(5)
    ok = ok and sl2.tilting_multiplicities(13, 5) == {13: 1, 5: 1}
    W = a1.group
    w13 = next(w for w in table.entries if W.dot_p(w, (0,), 5)[0] == 13)
    row = {W.dot_p(y, (0,), 5)[0]: c.eval_one()
           for y, c in table.entries[w13].terms.items()}
    ok = ok and row == {13: 1, 5: 1}
    report(13, ok, "v=1 antispherical table (p=5) matches the SL2 oracle "
                   "for all dominant weights <= 20, including T(13)")


def test_criterion_14_positivity_and_omega(a1):
    p0 = pcan.load_table(pcan.bundled_table_path("a1_affine_p0_regular.json"))
    p5 = pcan.load_table(pcan.bundled_table_path(
        "a1_affine_p5_antispherical.json"))
    ok = pcan.verify_positivity(p0).status == pcan.PASS
    ok = ok and pcan.verify_positivity(p5).status == pcan.PASS
    omega_rep = pcan.verify_omega_extension(p0)
    ok = ok and omega_rep.status == pcan.PASS
    ok = ok and int(omega_rep.notes[0].split()[0]) >= 20
    report(14, ok, "positivity PASS on both bundled tables; both one-sided "
                   "Omega factorizations verified on all regular entries")


def test_criterion_15_parity_shadow():
    from tiltlab.quiverlab import (preset_algebra, qh_structure, parity_check,
                                   tilting_module)
    from tiltlab.quiverlab.modules import simple
    Rab = preset_algebra("R_ab")
    S = qh_structure(Rab, [1, 2])
    t1 = tilting_module(Rab, [1, 2], 1, structure=S)
    t2 = tilting_module(Rab, [1, 2], 2, structure=S)
    dag = {1: 0, 2: 1}
    both = t1.module.direct_sum(t2.module)
    ok = parity_check(Rab, [1, 2], both, dag, structure=S).verdict == "parity"
    ok = ok and parity_check(Rab, [1, 2], simple(Rab, 2), dag,
                             structure=S).verdict == "neither"
    # tilting <-> parity correspondence piecewise
    ok = ok and parity_check(Rab, [1, 2], t1.module, dag,
                             structure=S).verdict == "even"
    ok = ok and parity_check(Rab, [1, 2], t2.module, dag,
                             structure=S).verdict == "odd"
    report(15, ok, "T1+T2 certified as a parity object for dag=(0,1); "
                   "L2 rejected")
