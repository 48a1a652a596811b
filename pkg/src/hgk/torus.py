"""The noncommutative 2-torus as a Galois object over the classical torus.

All constructions live over the exact phase ring Q[q, q^{-1}] where the
formal unit ``q`` stands for the rotation phase e^{2 pi i theta}, so every
identity is checked symbolically in theta.

  * ``torus_hopf``: commutative Hopf algebra on two group-like invertible
    generators u, v (coordinate functions on the torus), with the inverse
    star structure from ``torus_star``.
  * ``quantum_torus_algebra``: invertible generators U, V with the
    rotation relation U V = q V U.
  * ``quantum_torus_comodule``: the bicomodule-algebra structure
    U -> u (x) U / U (x) u (and likewise for V), with closed-form inverses
    of both canonical maps, making the rotation algebra a Galois object.
  * ``quantum_torus_star``: the unitary star U* = U^{-1}, V* = V^{-1} on
    the carrier, as a conjugate-linear map on elements.
"""

from .galois import ComoduleAlgebra
from .hopf import HopfAlgebra, StarStructure
from .rewriting import PresentedAlgebra
from .scalars import PhaseRing

PH = PhaseRing()


def torus_hopf():
    """Laurent polynomials in two commuting group-like unitaries u, v."""
    A = PresentedAlgebra(
        PH,
        ["u", "v"],
        powers={"u": ("invertible",), "v": ("invertible",)},
        exchange={("v", "u"): [(PH.one, [("u", 1), ("v", 1)])]},
    )
    lu, lv = (1, 0), (0, 1)
    H = HopfAlgebra.from_generator_data(
        A,
        comult={"u": {(lu, lu): PH.one}, "v": {(lv, lv): PH.one}},
        counit={"u": PH.one, "v": PH.one},
        antipode={"u": {(-1, 0): PH.one}, "v": {(0, -1): PH.one}},
        name="torus",
    )
    # on group-likes the antipode is the group inverse, which is involutive
    H.set_antipode_inverse(lambda l: {(-l[0], -l[1]): PH.one})
    return H


def torus_star(H):
    """u* = u^{-1}, v* = v^{-1}: the coordinate functions are unitaries."""
    return StarStructure(H, {"u": {(-1, 0): PH.one}, "v": {(0, -1): PH.one}})


def quantum_torus_algebra():
    """Invertible generators U, V with U V = q V U (rotation relation)."""
    return PresentedAlgebra(
        PH,
        ["U", "V"],
        powers={"U": ("invertible",), "V": ("invertible",)},
        exchange={("V", "U"): [(PH.monomial(-1), [("U", 1), ("V", 1)])]},
    )


def quantum_torus_star(elem):
    """(c U^m V^n)* = conj(c) q^{-mn} U^{-m} V^{-n}, extended additively."""
    out = {}
    for (m, n), c in elem.items():
        coeff = PH.mul(PH.conj(c), PH.monomial(-m * n))
        key = (-m, -n)
        out[key] = PH.add(out.get(key, PH.zero), coeff)
    return {k: v for k, v in out.items() if not PH.is_zero(v)}


def quantum_torus_comodule():
    """The rotation algebra as a bicomodule algebra over the torus, with
    both canonical-map inverses in closed form (monomial-by-monomial)."""
    H = torus_hopf()
    A = quantum_torus_algebra()
    lu, lv = (1, 0), (0, 1)
    lU, lV = (1, 0), (0, 1)
    C = ComoduleAlgebra.from_generator_coactions(
        A, H,
        left={"U": {(lu, lU): PH.one}, "V": {(lv, lV): PH.one}},
        right={"U": {(lU, lu): PH.one}, "V": {(lV, lv): PH.one}},
        name="rotation-algebra",
    )
    iU, iV = A.index["U"], A.index["V"]

    def left_inv(key):
        # u^k v^l (x) a  ->  U^k V^l (x) V^{-l} U^{-k} a
        (k, l), (m, n) = key
        tail = A.reduce_word(((iV, -l), (iU, -k), (iU, m), (iV, n)))
        return {((k, l), lbl): c for lbl, c in tail.items()}

    def right_inv(key):
        # a (x) u^k v^l  ->  a V^{-l} U^{-k} (x) u^k v^l
        (m, n), (k, l) = key
        head = A.reduce_word(((iU, m), (iV, n), (iV, -l), (iU, -k)))
        return {(lbl, (k, l)): c for lbl, c in head.items()}

    C.set_left_can_inverse(left_inv)
    C.set_right_can_inverse(right_inv)
    return C


def commuting_unitaries(square):
    """The coaction-invariant unitaries X = U (x) U^{-1}, Y = V (x) V^{-1}
    of the braided square; they commute and generate the invariants."""
    X = {((1, 0), (-1, 0)): PH.one}
    Y = {((0, 1), (0, -1)): PH.one}
    return X, Y
