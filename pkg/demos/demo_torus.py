"""Walk through the rotation-algebra example: the Hopf algebra of the
classical torus coacting on the quantum torus, the braided tensor square
with its phase law, and the witness showing why the plain tensor product
is not enough.

Run as:  python3 demos/demo_torus.py
"""

from hgk.hopf import TensorAlgebra, mul_elements
from hgk.scalars import PhaseRing
from hgk.torus import (
    commuting_unitaries,
    quantum_torus_comodule,
    quantum_torus_star,
)

PH = PhaseRing()


def fmt_pairs(elem):
    """Readable form of a braided-square element {((k,l),(m,n)): coeff}."""
    def leg(k, l):
        bits = [f"U^{k}" if k != 1 else "U" for k in (k,) if k] + \
               [f"V^{l}" if l != 1 else "V" for l in (l,) if l]
        return "*".join(bits) or "1"

    parts = []
    for (kl, mn) in sorted(elem):
        c = PH.format(elem[(kl, mn)])
        parts.append(f"({c})*{leg(*kl)} (x) {leg(*mn)}")
    return " + ".join(parts) or "0"


def main():
    C = quantum_torus_comodule()
    A = C.algebra

    print("== the carrier: unitaries U, V with U V = q V U ==")
    U, V = A.generator_element("U"), A.generator_element("V")
    print("  U*V =", A.format_element(A.mul(U, V)))
    print("  V*U =", A.format_element(A.mul(V, U)))
    print("  U* =", A.format_element(quantum_torus_star(U)))

    print("\n== the braided square and its phase law ==")
    S = C.braided_square()
    # generators of the two legs, as pair labels ((k,l),(m,n))
    UL, UR = ((1, 0), (0, 0)), ((0, 0), (1, 0))
    VL, VR = ((0, 1), (0, 0)), ((0, 0), (0, 1))
    for name, x, y in (("UR*VL", UR, VL), ("VR*UL", VR, UL),
                       ("UR*UL", UR, UL)):
        print(f"  {name} =", fmt_pairs(S.mul_labels(x, y)))

    print("\n== why the plain product fails ==")
    plain = C.square
    can = C.left_can()
    HA = TensorAlgebra([C.hopf.algebra, A])
    x, y = ((0, 0), (1, 0)), ((0, 1), (0, 0))  # 1 (x) U  and  V (x) 1
    lhs = can(plain.mul_labels(x, y))
    rhs = mul_elements(HA, can({x: PH.one}), can({y: PH.one}))
    print("  can((1 (x) U)(V (x) 1)) =", fmt_pairs(lhs))
    print("  can(1 (x) U) can(V (x) 1) =", fmt_pairs(rhs))
    print("  equal?", lhs == rhs, " (the braided product repairs this:",
          can(S.mul_labels(x, y)) == rhs, ")")

    print("\n== coaction-invariant unitaries of the square ==")
    X, Y = commuting_unitaries(S)
    print("  X =", fmt_pairs(X), "  Y =", fmt_pairs(Y))
    print("  X*Y == Y*X:",
          S.mul(X, Y) == S.mul(Y, X))


if __name__ == "__main__":
    main()
