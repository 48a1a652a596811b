"""The double and anti-double of the Taft algebra: the structural
construction on H* (x) H and the presented twin on generators A, B, K, F
are identified by explicit bijective algebra maps, the anti-double is a
bicomodule-algebra Galois object over the double, and its braided tensor
square has a fully certified presentation."""

import itertools

from hgk.doubles import (
    anti_double_comodule,
    anti_double_presented,
    anti_drinfeld_double,
    braided_square_presented,
    chi_isomorphism,
    chi_right,
    double_presented,
    drinfeld_double,
    dual_identification,
    invariant_generator_images,
    square_label_join,
    square_label_split,
    structural_generator_images,
    taft_dual_presented,
    taft_hopf,
)
from hgk.galois import (
    verify_braiding_properties,
    verify_can_intertwines_diagonal,
    verify_can_inverse,
    verify_comodule_axioms,
    verify_translation_identities,
)
from hgk.hopf import (
    check_algebra_map,
    check_bijective,
    extend_algebra_map,
    pairing,
    verify_hopf_axioms,
)
from hgk.linalg import vec_eq
from hgk.rewriting import confluence_check
from hgk.scalars import CyclotomicField

Z3 = CyclotomicField(3)
q = Z3.generator()
q2 = Z3.pow(q, 2)
one = Z3.one

lA, lB = (1, 0, 0, 0), (0, 1, 0, 0)
lK, lF = (0, 0, 1, 0), (0, 0, 0, 1)


def failing(report):
    return {k: v for k, v in report.items() if k != "ok" and not v["ok"]}


# -- the dual ------------------------------------------------------------------

def test_presented_dual_is_a_hopf_algebra():
    Hd = taft_dual_presented()
    report = verify_hopf_axioms(Hd)
    assert report["ok"], failing(report)


def test_dual_identification_is_a_hopf_isomorphism():
    H = taft_hopf()
    Hd = taft_dual_presented()
    D, theta = dual_identification(H, Hd)
    ok, wit = check_algebra_map(Hd.algebra, D.algebra, theta)
    assert ok, wit
    assert check_bijective(theta, Hd.algebra.basis(), Z3)
    for l in Hd.algebra.basis():
        # comultiplication
        lhs = {}
        for (x, y), c in Hd.comult_label(l).items():
            for x2, u in theta({x: one}).items():
                for y2, v in theta({y: one}).items():
                    k = (x2, y2)
                    lhs[k] = Z3.add(lhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        rhs = {}
        for m, c in theta({l: one}).items():
            for k, u in D.comult_label(m).items():
                rhs[k] = Z3.add(rhs.get(k, Z3.zero), Z3.mul(c, u))
        assert vec_eq(Z3, lhs, rhs), l
        # counit and antipode
        assert Z3.eq(Hd.counit_label(l),
                     Z3.sum(Z3.mul(c, D.counit_label(m))
                            for m, c in theta({l: one}).items()))
        assert vec_eq(Z3, theta(Hd.antipode_label(l)),
                      D.antipode(theta({l: one})))


def test_dual_identification_pairing_table():
    H = taft_hopf()
    Hd = taft_dual_presented()
    _, theta = dual_identification(H, Hd)
    lk, lf = (0, 1), (1, 0)   # dual-presentation labels f^i k^j
    la, lb, lone = (0, 1), (1, 0), (0, 0)
    table = [
        (lk, la, q), (lk, lb, Z3.zero), (lk, lone, one),
        (lf, la, Z3.zero), (lf, lb, one), (lf, lone, Z3.zero),
    ]
    for dual_label, h_label, value in table:
        got = pairing(theta({dual_label: one}), {h_label: one}, Z3)
        assert Z3.eq(got, value), (dual_label, h_label)


# -- the double, structurally and by presentation ------------------------------

def test_presented_double_is_a_hopf_algebra():
    DP = double_presented()
    basis = DP.algebra.basis()
    pairs = list(itertools.product(basis, basis))[::5]
    report = verify_hopf_axioms(DP, product_pairs=pairs)
    assert report["ok"], failing(report)


def test_structural_double_is_a_hopf_algebra_sampled():
    D = drinfeld_double()
    basis = D.algebra.basis()
    pairs = list(itertools.product(basis, basis))[::131]
    report = verify_hopf_axioms(D, product_pairs=pairs)
    assert report["ok"], failing(report)


def test_double_identification():
    DP = double_presented()
    D = drinfeld_double()
    phi = extend_algebra_map(DP.algebra, D.algebra,
                             structural_generator_images())
    basis = DP.algebra.basis()
    # multiplicativity on every generator pair and a basis sample
    gen_labels = [lA, lB, lK, lF]
    pairs = list(itertools.product(gen_labels, basis)) + \
        list(itertools.product(basis, gen_labels)) + \
        list(itertools.product(basis, basis))[::41]
    ok, wit = check_algebra_map(DP.algebra, D.algebra, phi, pairs=pairs)
    assert ok, wit
    assert check_bijective(phi, basis, Z3)
    # the identification also matches the coalgebra and the antipode
    for l in basis:
        lhs = {}
        for (x, y), c in DP.comult_label(l).items():
            for x2, u in phi({x: one}).items():
                for y2, v in phi({y: one}).items():
                    k = (x2, y2)
                    lhs[k] = Z3.add(lhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        assert vec_eq(Z3, lhs, D.comult(phi({l: one}))), l
        assert Z3.eq(DP.counit_label(l),
                     Z3.sum(Z3.mul(c, D.counit_label(m))
                            for m, c in phi({l: one}).items()))
        assert vec_eq(Z3, phi(DP.antipode_label(l)),
                      D.antipode(phi({l: one}))), l


def test_anti_double_identification():
    AP = anti_double_presented()
    C = anti_drinfeld_double()
    phi = extend_algebra_map(AP, C.algebra, structural_generator_images())
    basis = AP.basis()
    gen_labels = [lA, lB, lK, lF]
    pairs = list(itertools.product(gen_labels, basis)) + \
        list(itertools.product(basis, gen_labels)) + \
        list(itertools.product(basis, basis))[::41]
    ok, wit = check_algebra_map(AP, C.algebra, phi, pairs=pairs)
    assert ok, wit
    assert check_bijective(phi, basis, Z3)


def test_identifications_intertwine_the_coactions():
    AP = anti_double_presented()
    DP = double_presented()
    Cs = anti_drinfeld_double()
    Cp = anti_double_comodule()
    images = structural_generator_images()
    phiA = extend_algebra_map(AP, Cs.algebra, images)
    phiD = extend_algebra_map(DP.algebra, drinfeld_double().algebra, images)
    for l in AP.basis():
        # right coactions
        lhs = {}
        for (a, d), c in Cp.right_coaction_label(l).items():
            for a2, u in phiA({a: one}).items():
                for d2, v in phiD({d: one}).items():
                    k = (a2, d2)
                    lhs[k] = Z3.add(lhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        assert vec_eq(Z3, lhs, Cs.right_coaction(phiA({l: one}))), l
        # left coactions
        lhs = {}
        for (d, a), c in Cp.left_coaction_label(l).items():
            for d2, u in phiD({d: one}).items():
                for a2, v in phiA({a: one}).items():
                    k = (d2, a2)
                    lhs[k] = Z3.add(lhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        assert vec_eq(Z3, lhs, Cs.left_coaction(phiA({l: one}))), l


def test_chi_intertwines_coactions_with_the_coproduct():
    AP = anti_double_presented()
    DP = double_presented()
    C = anti_double_comodule()
    chi, chi_inv = chi_isomorphism(AP, DP)
    chiR, chiR_inv = chi_right(AP, DP)
    ok, wit = check_algebra_map(AP, DP.algebra, chi,
                                pairs=list(itertools.product(
                                    AP.basis(), AP.basis()))[::23])
    assert ok, wit
    for l in AP.basis():
        e = {l: one}
        assert vec_eq(Z3, chi(chi_inv(e)), e)
        assert vec_eq(Z3, chiR(chiR_inv(e)), e)
        # left coaction = (id (x) chi^{-1}) o Delta o chi
        rhs = {}
        for m, c in chi(e).items():
            for (d1, d2), u in DP.comult_label(m).items():
                for a, v in chi_inv({d2: one}).items():
                    k = (d1, a)
                    rhs[k] = Z3.add(rhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        assert vec_eq(Z3, C.left_coaction_label(l), rhs), l
        # right coaction = (chi_R^{-1} (x) id) o Delta o chi_R
        rhs = {}
        for m, c in chiR(e).items():
            for (d1, d2), u in DP.comult_label(m).items():
                for a, v in chiR_inv({d1: one}).items():
                    k = (a, d2)
                    rhs[k] = Z3.add(rhs.get(k, Z3.zero),
                                    Z3.mul(c, Z3.mul(u, v)))
        assert vec_eq(Z3, C.right_coaction_label(l), rhs), l


# -- Galois structure of the anti-double ---------------------------------------

def test_anti_double_comodule_axioms():
    C = anti_double_comodule()
    basis = C.algebra.basis()
    pairs = list(itertools.product(basis, basis))[::67]
    report = verify_comodule_axioms(C, pairs=pairs)
    assert report["ok"], failing(report)


def test_structural_anti_double_comodule_axioms_sampled():
    C = anti_drinfeld_double()
    basis = C.algebra.basis()
    labels = basis[::113]
    pairs = list(itertools.product(labels, labels))[::7]
    report = verify_comodule_axioms(C, labels=labels, pairs=pairs)
    assert report["ok"], failing(report)


def test_canonical_map_inverses():
    C = anti_double_comodule()
    basis = C.algebra.basis()
    sub = basis[::8]
    pairs = list(itertools.product(sub, sub))[::3]
    for side in ("left", "right"):
        report = verify_can_inverse(C, side=side, h_labels=sub,
                                    a_labels=sub, pair_labels=pairs)
        assert report["ok"], (side, failing(report))


def test_translation_identities():
    C = anti_double_comodule()
    basis = C.algebra.basis()
    sub = basis[::8]
    report = verify_translation_identities(
        C, h_labels=sub, q_labels=sub,
        hk_pairs=list(itertools.product(sub, sub))[::3])
    assert report["ok"], failing(report)


def test_coinvariants_are_scalars():
    C = anti_double_comodule()
    unit = C.algebra.unit_label()
    for side in ("left", "right"):
        vecs = C.coinvariant_basis(side=side)
        assert len(vecs) == 1
        assert set(vecs[0]) == {unit}


# -- the braided square --------------------------------------------------------

def test_braided_square_cross_relations():
    C = anti_double_comodule()
    S = C.braided_square()
    lone = (0, 0, 0, 0)

    def L(g):
        return (g, lone)

    def R(g):
        return (lone, g)

    def mul(p1, p2):
        return S.mul_labels(p1, p2)

    def lin(*terms):
        out = {}
        for c, e in terms:
            for k, u in e.items():
                out[k] = Z3.add(out.get(k, Z3.zero), Z3.mul(c, u))
        return {k: v for k, v in out.items() if not Z3.is_zero(v)}

    AL, BL, KL, FL = L(lA), L(lB), L(lK), L(lF)
    AR, BR, KR, FR = R(lA), R(lB), R(lK), R(lF)
    lmq = Z3.sub(one, q)        # 1 - q
    lmq2 = Z3.sub(one, q2)      # 1 - q^2

    assert vec_eq(Z3, mul(AR, AL), mul(AL, AR))
    assert vec_eq(Z3, mul(BR, AL), lin((q2, mul(AL, BR))))
    assert vec_eq(Z3, mul(KR, AL), mul(AL, KR))
    assert vec_eq(Z3, mul(FR, AL), lin((q, mul(AL, FR))))
    assert vec_eq(Z3, mul(AR, BL),
                  lin((one, mul(BL, AR)), (lmq2, mul(AL, BR))))
    # recovered from the braided product: the lower-order term carries
    # A_R squared (cross-checked by hand through the translation map)
    assert vec_eq(Z3, mul(BR, BL),
                  lin((q, mul(BL, BR)),
                      (lmq, S.mul(S.mul(mul(AL, AR), {AR: one}),
                                  mul(BR, BR)))))
    assert vec_eq(Z3, mul(KR, BL),
                  lin((one, mul(BL, KR)),
                      (Z3.neg(lmq),
                       S.mul(S.mul(mul(AL, AR), {AR: one}),
                             mul(BR, KR)))))
    assert vec_eq(Z3, mul(FR, BL),
                  lin((q2, mul(BL, FR)),
                      (Z3.neg(q), S.mul(mul(AL, AR), {KR: one})),
                      (one, {AL: one})))
    assert vec_eq(Z3, mul(AR, KL), mul(KL, AR))
    # this one is recovered from the braided product itself: the right-leg
    # B moves past the left-leg K with a plain q^2, no lower-order terms
    assert vec_eq(Z3, mul(BR, KL), lin((q2, mul(KL, BR))))
    assert vec_eq(Z3, mul(KR, KL), mul(KL, KR))
    assert vec_eq(Z3, mul(FR, KL), lin((q, mul(KL, FR))))
    assert vec_eq(Z3, mul(AR, FL),
                  lin((one, mul(FL, AR)), (lmq, mul(AR, FR))))
    # also recovered from the braided product (the only expansion whose
    # legs multiply back to B F, as braided commutativity demands)
    assert vec_eq(Z3, mul(BR, FL),
                  lin((q2, mul(FL, BR)),
                      (lmq, mul(BR, FR)),
                      (one, S.mul(mul(AR, AR), {KR: one})),
                      (Z3.neg(q2), {AR: one})))
    assert vec_eq(Z3, mul(KR, FL),
                  lin((one, mul(FL, KR)), (lmq, mul(KR, FR))))
    assert vec_eq(Z3, mul(FR, FL),
                  lin((q, mul(FL, FR)), (lmq, mul(FR, FR))))


def test_presented_square_matches_braided_product():
    P = braided_square_presented()
    C = anti_double_comodule()
    S = C.braided_square()

    def oracle(l1, l2):
        prod = S.mul_labels(square_label_split(l1), square_label_split(l2))
        return {square_label_join(k): c for k, c in prod.items()}

    import random
    rng = random.Random(7)
    basis = P.basis()
    pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(500)]
    gens = [tuple(1 if i == j else 0 for i in range(8)) for j in range(8)]
    pairs += list(itertools.product(gens, gens))
    report = confluence_check(P, max_word_len=3, samples=120, oracle=oracle,
                              oracle_pairs=pairs)
    assert report["joinable"], report["witnesses"]
    assert report["oracle_match"], report["witnesses"]


def test_braiding_properties_sampled():
    C = anti_double_comodule()
    gens = [(0, 0, 0, 0), lA, lB, lK, lF, (1, 1, 0, 0), (0, 0, 1, 1)]
    report = verify_braiding_properties(
        C, labels=gens,
        triples=list(itertools.product(gens, gens, gens))[::5])
    assert report["ok"], failing(report)


def test_can_intertwines_diagonal_sampled():
    C = anti_double_comodule()
    S = C.braided_square()
    basis = C.algebra.basis()
    pair_labels = [(x, y) for x in basis[::10] for y in basis[::10]]
    report = verify_can_intertwines_diagonal(
        C, square=S, pair_labels=pair_labels,
        pairs_of_pairs=list(itertools.product(pair_labels,
                                              pair_labels))[::29])
    assert report["ok"], failing(report)


def test_invariant_generators_realize_the_double():
    C = anti_double_comodule()
    S = C.braided_square()
    DP = double_presented()
    images = invariant_generator_images()
    unit_d = (0, 0, 0, 0)
    # each generator image is coaction-invariant under the diagonal coaction
    for name, elem in images.items():
        lhs = {}
        for p, c in elem.items():
            for k, u in S.diagonal_coaction_label(p).items():
                lhs[k] = Z3.add(lhs.get(k, Z3.zero), Z3.mul(c, u))
        expected = {(p, unit_d): c for p, c in elem.items()}
        assert vec_eq(Z3, lhs, expected), name
    # sending A, B, K, F to them embeds the double into the square
    phi = extend_algebra_map(DP.algebra, S, images)
    basis = DP.algebra.basis()
    gen_labels = [lA, lB, lK, lF]
    pairs = list(itertools.product(gen_labels, gen_labels)) + \
        list(itertools.product(basis, basis))[::173]
    ok, wit = check_algebra_map(DP.algebra, S, phi, pairs=pairs)
    assert ok, wit
    assert check_bijective(phi, basis, Z3)  # injective: 81-dim invariants
