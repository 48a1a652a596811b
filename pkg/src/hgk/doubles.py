"""Drinfeld double and anti-Drinfeld double of the 9-dimensional Taft
algebra, in two independent realizations each.

The base Hopf algebra ``taft_hopf`` has generators b (nilpotent), a (of
order 3) with a b = q b a, q a primitive third root of unity; b is
skew-primitive over the group-like a.  Everything below is built twice:

  * *structurally*, on the 81-dimensional space H* (x) H with the double
    multiplication
        (phi (x) h)(phi' (x) h')
            = phi'_(1)(S^{-1}(h_(3))) phi'_(3)(h_(1)) phi phi'_(2)
              (x) h_(2) h',
    its anti-double variant with phi'_(3)(S^2(h_(1))) in place of
    phi'_(3)(h_(1)), and the coactions of the double on the anti-double;
  * *by presentation*, as rewriting algebras on generators A, B, K, F
    (resp. their anti-double twins) with explicit exchange rules.

The identifications between the two realizations are plain generator
images, and verifying that they are bijective algebra (and where relevant
coalgebra) maps is the point of the accompanying tests: the exchange
rules are exactly the relations forced by the structural multiplication.
"""

import itertools

from .galois import ComoduleAlgebra
from .hopf import (
    DualHopf,
    HopfAlgebra,
    StructureConstantAlgebra,
    extend_algebra_map,
)
from .linalg import LinearMap, vec_clean
from .rewriting import PresentedAlgebra
from .scalars import CyclotomicField

Z3 = CyclotomicField(3)
q = Z3.generator()
q2 = Z3.pow(q, 2)
one = Z3.one


def taft_hopf():
    """The 9-dimensional Taft algebra at a third root of unity."""
    A = PresentedAlgebra(
        Z3,
        ["b", "a"],
        powers={"a": ("order", 3), "b": ("nilpotent", 3)},
        exchange={("a", "b"): [(q, [("b", 1), ("a", 1)])]},
    )
    la, lb = (0, 1), (1, 0)
    return HopfAlgebra.from_generator_data(
        A,
        comult={"a": {(la, la): one},
                "b": {(la, lb): one, (lb, (0, 2)): one}},
        counit={"a": one, "b": Z3.zero},
        antipode={"a": {(0, 2): one}, "b": {lb: Z3.neg(q2)}},
        name="taft",
    )


def taft_dual_presented():
    """The dual of the Taft algebra, presented on generators f, k with
    k^3 = 1, f^3 = 0, f k = q k f; f is (1, k)-skew primitive."""
    A = PresentedAlgebra(
        Z3,
        ["f", "k"],
        powers={"k": ("order", 3), "f": ("nilpotent", 3)},
        exchange={("k", "f"): [(q2, [("f", 1), ("k", 1)])]},
    )
    lf, lk, lone = (1, 0), (0, 1), (0, 0)
    return HopfAlgebra.from_generator_data(
        A,
        comult={"k": {(lk, lk): one},
                "f": {(lf, lone): one, (lk, lf): one}},
        counit={"k": one, "f": Z3.zero},
        antipode={"k": {(0, 2): one},
                  # S(f) = -k^2 f = -q f k^2
                  "f": {(1, 2): Z3.neg(q)}},
        name="taft-dual",
    )


def dual_coordinate_images():
    """The presented dual generators as coordinate functionals on the Taft
    basis {b^n a^m}: k is the character a -> q, b -> 0, and f picks the
    b-coefficient twisted by k (f(b a^m) = 1, zero elsewhere)."""
    k_img = {(0, j): Z3.pow(q, j) for j in range(3)}
    f_img = {(1, j): one for j in range(3)}
    return {"k": k_img, "f": f_img}


def dual_identification(H=None, Hd=None):
    """(DualHopf(H), theta) with theta the algebra map sending the
    presented dual generators to their coordinate realizations."""
    H = H or taft_hopf()
    Hd = Hd or taft_dual_presented()
    D = DualHopf(H)
    theta = extend_algebra_map(Hd.algebra, D.algebra,
                               dual_coordinate_images())
    return D, theta


# -- structural double and anti-double ----------------------------------------

def _double_carrier(H, anti):
    """Structure constants of the (anti-)double on labels (phi, h)."""
    ring = H.ring
    Hd = DualHopf(H)
    A = H.algebra
    Sinv = H.antipode_inverse()
    labels = [(p, h) for p in A.basis() for h in A.basis()]

    def s_inv_coeff(y, h):
        return Sinv({h: ring.one}).get(y, ring.zero)

    if anti:
        def s2(h):
            return H.antipode(H.antipode_label(h))

        def first_leg_coeff(y, h):
            return s2(h).get(y, ring.zero)
    else:
        def first_leg_coeff(y, h):
            return ring.one if y == h else ring.zero

    def mul_rule(x1, x2):
        (p, h), (p2, h2) = x1, x2
        out = {}
        for (y1, y2, y3), c in Hd.comult_power_label(p2, 2).items():
            for (h1, hm, h3), d in H.comult_power_label(h, 2).items():
                s = s_inv_coeff(y1, h3)
                if ring.is_zero(s):
                    continue
                t = first_leg_coeff(y3, h1)
                if ring.is_zero(t):
                    continue
                coeff = ring.mul(ring.mul(c, d), ring.mul(s, t))
                for pp, u in Hd.algebra.mul_labels(p, y2).items():
                    cu = ring.mul(coeff, u)
                    for hh, v in A.mul_labels(hm, h2).items():
                        k = (pp, hh)
                        sacc = ring.add(out.get(k, ring.zero),
                                        ring.mul(cu, v))
                        if ring.is_zero(sacc):
                            out.pop(k, None)
                        else:
                            out[k] = sacc
        return out

    unit = {(p, A.unit_label()): c for p, c in Hd.algebra.one().items()}
    name = "anti-double" if anti else "double"
    carrier = StructureConstantAlgebra(ring, labels, mul_rule, unit,
                                       name=name)
    return carrier, Hd


def drinfeld_double(H=None):
    """The Drinfeld double as a Hopf algebra on H* (x) H.  The coalgebra
    is (H*)^cop (x) H and the antipode is assembled antimultiplicatively
    from the antipodes of the two halves."""
    H = H or taft_hopf()
    ring = H.ring
    carrier, Hd = _double_carrier(H, anti=False)
    A = H.algebra

    def comult_rule(key):
        p, h = key
        out = {}
        for (p1, p2), c in Hd.comult_label(p).items():
            for (h1, h2), d in H.comult_label(h).items():
                k = ((p2, h1), (p1, h2))
                out[k] = ring.add(out.get(k, ring.zero), ring.mul(c, d))
        return vec_clean(ring, out)

    def counit_rule(key):
        p, h = key
        return ring.mul(Hd.counit_label(p), H.counit_label(h))

    def antipode_rule(key):
        # S(phi (x) h) = (eps (x) S(h)) (S*^{-1}(phi) (x) 1)
        p, h = key
        Sd_inv = Hd.antipode_inverse()
        e1 = {}
        for sh, c in H.antipode_label(h).items():
            for pl, u in Hd.algebra.one().items():
                e1[(pl, sh)] = ring.mul(c, u)
        e2 = {(pl, A.unit_label()): c
              for pl, c in Sd_inv({p: ring.one}).items()}
        return carrier.mul(e1, e2)

    return HopfAlgebra(carrier, comult_rule, counit_rule, antipode_rule,
                       name="double")


def anti_drinfeld_double(H=None, double=None):
    """The anti-Drinfeld double as a bicomodule algebra over the double.

    Returned as a ``ComoduleAlgebra`` whose carrier has the twisted
    multiplication and whose coactions are

      right:  psi (x) k  ->  (psi_(2) (x) k_(1)) (x) (psi_(1) (x) k_(2))
      left:   psi (x) k  ->  (psi_(2) (x) S^2(k_(1)))
                               (x) (psi_(1) (x) k_(2))
    """
    H = H or taft_hopf()
    ring = H.ring
    carrier, Hd = _double_carrier(H, anti=True)
    if double is None:
        double = drinfeld_double(H)

    def right_rule(key):
        p, h = key
        out = {}
        for (p1, p2), c in Hd.comult_label(p).items():
            for (h1, h2), d in H.comult_label(h).items():
                k = ((p2, h1), (p1, h2))
                out[k] = ring.add(out.get(k, ring.zero), ring.mul(c, d))
        return vec_clean(ring, out)

    def left_rule(key):
        p, h = key
        out = {}
        for (p1, p2), c in Hd.comult_label(p).items():
            for (h1, h2), d in H.comult_label(h).items():
                cd = ring.mul(c, d)
                for s, u in H.antipode(H.antipode_label(h1)).items():
                    k = ((p2, s), (p1, h2))
                    out[k] = ring.add(out.get(k, ring.zero),
                                      ring.mul(cd, u))
        return vec_clean(ring, out)

    return ComoduleAlgebra(carrier, double, left_rule=left_rule,
                           right_rule=right_rule, name="anti-double")


# -- presented twins -----------------------------------------------------------

_DOUBLE_WEIGHTS = {"A": 1, "B": 3, "K": 1, "F": 2}
_DOUBLE_POWERS = {"A": ("order", 3), "K": ("order", 3),
                  "B": ("nilpotent", 3), "F": ("nilpotent", 3)}


def _double_exchange(fb_rule):
    return {
        ("B", "A"): [(q2, [("A", 1), ("B", 1)])],
        ("K", "A"): [(one, [("A", 1), ("K", 1)])],
        ("K", "B"): [(q, [("B", 1), ("K", 1)])],
        ("F", "A"): [(q, [("A", 1), ("F", 1)])],
        ("F", "K"): [(q, [("K", 1), ("F", 1)])],
        ("F", "B"): fb_rule,
    }


def double_presented():
    """The double on generators A, B (the Taft half) and K, F (the dual
    half), as a Hopf algebra with ordered-monomial basis A^i B^j K^l F^m."""
    # F B = q^2 B F - A^2 K + A   (from B F = q F B + q K A^2 - q A)
    P = PresentedAlgebra(
        Z3, ["A", "B", "K", "F"],
        powers=_DOUBLE_POWERS,
        exchange=_double_exchange([
            (q2, [("B", 1), ("F", 1)]),
            (Z3.neg(one), [("A", 2), ("K", 1)]),
            (one, [("A", 1)]),
        ]),
        weights=_DOUBLE_WEIGHTS,
    )
    lA, lB, lK, lF = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    lone = (0, 0, 0, 0)
    return HopfAlgebra.from_generator_data(
        P,
        comult={
            "A": {(lA, lA): one},
            "B": {(lA, lB): one, (lB, (2, 0, 0, 0)): one},
            "K": {(lK, lK): one},
            "F": {(lone, lF): one, (lF, lK): one},
        },
        counit={"A": one, "K": one, "B": Z3.zero, "F": Z3.zero},
        antipode={
            "A": {(2, 0, 0, 0): one},
            "B": {lB: Z3.neg(q2)},
            "K": {(0, 0, 2, 0): one},
            # S(F) = -F K^2 = -q^2 K^2 F
            "F": {(0, 0, 2, 1): Z3.neg(q2)},
        },
        name="double-presented",
    )


def anti_double_presented():
    """The anti-double twin: same generator names, same exchange rules,
    except F B = q^2 B F - q A^2 K + A."""
    return PresentedAlgebra(
        Z3, ["A", "B", "K", "F"],
        powers=_DOUBLE_POWERS,
        exchange=_double_exchange([
            (q2, [("B", 1), ("F", 1)]),
            (Z3.neg(q), [("A", 2), ("K", 1)]),
            (one, [("A", 1)]),
        ]),
        weights=_DOUBLE_WEIGHTS,
    )


def structural_generator_images():
    """Generator images in (phi, h) coordinates shared by the double and
    the anti-double: A = eps (x) a, B = eps (x) b, K = k (x) 1,
    F = f (x) 1, with eps, k, f as coordinate functionals."""
    la, lb, lone = (0, 1), (1, 0), (0, 0)
    duals = dual_coordinate_images()
    return {
        "A": {((0, j), la): one for j in range(3)},
        "B": {((0, j), lb): one for j in range(3)},
        "K": {(p, lone): c for p, c in duals["k"].items()},
        "F": {(p, lone): c for p, c in duals["f"].items()},
    }


def _monomial_scaling_map(source, target, exponents_to_power):
    """Algebra map sending each ordered monomial to the same monomial
    scaled by q^(linear form in the exponents); its inverse is closed
    form."""
    ring = source.ring

    def fwd(l):
        return {l: Z3.pow(q, exponents_to_power(l))}

    def inv(l):
        return {l: Z3.pow(q, -exponents_to_power(l))}

    return LinearMap(ring, fwd), LinearMap(ring, inv)


def chi_isomorphism(anti, double):
    """chi: anti-double -> double, A -> A, B -> q B, K -> q^2 K,
    F -> q^2 F, with its closed-form inverse."""
    return _monomial_scaling_map(
        anti, double, lambda l: l[1] + 2 * l[2] + 2 * l[3])


def chi_right(anti, double):
    """The right-sided analogue: A -> A, B -> B, K -> q^2 K, F -> F."""
    return _monomial_scaling_map(anti, double, lambda l: 2 * l[2])


def anti_double_comodule():
    """The presented anti-double as a bicomodule algebra over the
    presented double, with closed-form inverses of both canonical maps.

    The generator coactions are
      left:   A -> A (x) A,  B -> A (x) B + q B (x) A^2,
              K -> K (x) K,  F -> 1 (x) F + F (x) K
      right:  A -> A (x) A,  B -> A (x) B + B (x) A^2,
              K -> K (x) K,  F -> 1 (x) F + F (x) K
    (left legs in the double, right legs in the anti-double and so on),
    and the canonical-map inverses run through the monomial isomorphisms
    ``chi_isomorphism`` / ``chi_right``:

      left  can^{-1}(d (x) p) = chi^{-1}(d_(1))
                                 (x) chi^{-1}(S(d_(2))) p
      right can^{-1}(p (x) d) = p chi_R^{-1}(S(d_(1)))
                                 (x) chi_R^{-1}(d_(2))
    """
    DP = double_presented()
    AP = anti_double_presented()
    ring = AP.ring
    lA, lB, lK, lF = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    lA2, lone = (2, 0, 0, 0), (0, 0, 0, 0)
    C = ComoduleAlgebra.from_generator_coactions(
        AP, DP,
        left={
            "A": {(lA, lA): one},
            "B": {(lA, lB): one, (lB, lA2): q},
            "K": {(lK, lK): one},
            "F": {(lone, lF): one, (lF, lK): one},
        },
        right={
            "A": {(lA, lA): one},
            "B": {(lA, lB): one, (lB, lA2): one},
            "K": {(lK, lK): one},
            "F": {(lone, lF): one, (lF, lK): one},
        },
        name="anti-double",
    )
    chi, chi_inv = chi_isomorphism(AP, DP)
    chiR, chiR_inv = chi_right(AP, DP)

    def left_inv(key):
        d, p = key
        out = {}
        for (d1, d2), c in DP.comult_label(d).items():
            x1 = chi_inv({d1: ring.one})
            x2 = chi_inv(DP.antipode_label(d2))
            for l1, u in x1.items():
                for l2, v in x2.items():
                    cuv = ring.mul(c, ring.mul(u, v))
                    for m, w in AP.mul_labels(l2, p).items():
                        k = (l1, m)
                        s = ring.add(out.get(k, ring.zero),
                                     ring.mul(cuv, w))
                        if ring.is_zero(s):
                            out.pop(k, None)
                        else:
                            out[k] = s
        return out

    def right_inv(key):
        p, d = key
        out = {}
        for (d1, d2), c in DP.comult_label(d).items():
            x1 = chiR_inv(DP.antipode_label(d1))
            x2 = chiR_inv({d2: ring.one})
            for l1, u in x1.items():
                cu = ring.mul(c, u)
                for m, w in AP.mul_labels(p, l1).items():
                    for l2, v in x2.items():
                        k = (m, l2)
                        s = ring.add(out.get(k, ring.zero),
                                     ring.mul(cu, ring.mul(w, v)))
                        if ring.is_zero(s):
                            out.pop(k, None)
                        else:
                            out[k] = s
        return out

    C.set_left_can_inverse(left_inv)
    C.set_right_can_inverse(right_inv)
    return C


# -- the braided square, presented ---------------------------------------------

_SQUARE_WEIGHTS = {"AL": 1, "BL": 5, "KL": 1, "FL": 3,
                   "AR": 1, "BR": 2, "KR": 1, "FR": 2}


def braided_square_presented():
    """The braided tensor square of the anti-double as a rewriting algebra
    on A_L, ..., F_L, A_R, ..., F_R: each block carries the anti-double
    relations and the sixteen cross rules move right-leg generators past
    left-leg ones.  The accompanying tests certify the whole table against
    the braided product computed from the coactions."""
    def w(*letters):
        return [(g, 1) for g in letters]

    exchange = {}
    for s in ("L", "R"):
        A, B, K, F = (f"A{s}", f"B{s}", f"K{s}", f"F{s}")
        exchange.update({
            (B, A): [(q2, w(A, B))],
            (K, A): [(one, w(A, K))],
            (K, B): [(q, w(B, K))],
            (F, A): [(q, w(A, F))],
            (F, K): [(q, w(K, F))],
            (F, B): [(q2, w(B, F)),
                     (Z3.neg(q), [(A, 2), (K, 1)]),
                     (one, w(A))],
        })
    r = Z3.sub  # shorthand for 1 - x style coefficients
    exchange.update({
        ("AR", "AL"): [(one, w("AL", "AR"))],
        ("BR", "AL"): [(q2, w("AL", "BR"))],
        ("KR", "AL"): [(one, w("AL", "KR"))],
        ("FR", "AL"): [(q, w("AL", "FR"))],
        ("AR", "BL"): [(one, w("BL", "AR")), (r(one, q2), w("AL", "BR"))],
        ("BR", "BL"): [(q, w("BL", "BR")),
                       (r(one, q), [("AL", 1), ("AR", 2), ("BR", 2)])],
        ("KR", "BL"): [(one, w("BL", "KR")),
                       (r(q, one), [("AL", 1), ("AR", 2), ("BR", 1),
                                    ("KR", 1)])],
        ("FR", "BL"): [(q2, w("BL", "FR")),
                       (Z3.neg(q), w("AL", "AR", "KR")),
                       (one, w("AL"))],
        ("AR", "KL"): [(one, w("KL", "AR"))],
        ("BR", "KL"): [(q2, w("KL", "BR"))],
        ("KR", "KL"): [(one, w("KL", "KR"))],
        ("FR", "KL"): [(q, w("KL", "FR"))],
        ("AR", "FL"): [(one, w("FL", "AR")), (r(one, q), w("AR", "FR"))],
        ("BR", "FL"): [(q2, w("FL", "BR")),
                       (r(one, q), w("BR", "FR")),
                       (one, [("AR", 2), ("KR", 1)]),
                       (Z3.neg(q2), w("AR"))],
        ("KR", "FL"): [(one, w("FL", "KR")), (r(one, q), w("KR", "FR"))],
        ("FR", "FL"): [(q, w("FL", "FR")), (r(one, q), [("FR", 2)])],
    })
    powers = {}
    for s in ("L", "R"):
        powers[f"A{s}"] = ("order", 3)
        powers[f"K{s}"] = ("order", 3)
        powers[f"B{s}"] = ("nilpotent", 3)
        powers[f"F{s}"] = ("nilpotent", 3)
    return PresentedAlgebra(
        Z3,
        ["AL", "BL", "KL", "FL", "AR", "BR", "KR", "FR"],
        powers=powers,
        exchange=exchange,
        weights=_SQUARE_WEIGHTS,
    )


def square_label_split(label8):
    """8-exponent label of the presented square -> pair of anti-double
    labels (left leg, right leg)."""
    return tuple(label8[:4]), tuple(label8[4:])


def square_label_join(pair):
    return tuple(pair[0]) + tuple(pair[1])


def invariant_generator_images():
    """Coaction-invariant elements of the braided square realizing the
    double inside it:  a = A (x) A^2,  b = -q A (x) B + q^2 B (x) A,
    k = K (x) K^2,  f = -1 (x) F K^2 + F (x) K^2   (F K^2 = q^2 K^2 F)."""
    lA, lB, lK, lF = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    return {
        "A": {(lA, (2, 0, 0, 0)): one},
        "B": {(lA, lB): Z3.neg(q), (lB, lA): q2},
        "K": {(lK, (0, 0, 2, 0)): one},
        "F": {((0, 0, 0, 0), (0, 0, 2, 1)): Z3.neg(q2),
              (lF, (0, 0, 2, 0)): one},
    }
