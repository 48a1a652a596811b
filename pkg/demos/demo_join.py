"""Walk through the braided join: interval-valued elements of the braided
square that collapse to one leg at each endpoint, the two strong
connections, and the invariant subalgebra matching the suspension.

Run as:  python3 demos/demo_join.py
"""

from hgk.galois import verify_strong_connection
from hgk.join import (
    IntervalFunction,
    JoinAlgebra,
    SuspensionModel,
    half_model_comodule,
    strong_connection,
    truncated_join_invariant_dimension,
)
from hgk.scalars import PhaseRing
from hgk.torus import quantum_torus_comodule

PH = PhaseRing()
WINDOW2 = [(k, l) for k in range(-2, 3) for l in range(-2, 3)]


def main():
    C = quantum_torus_comodule()
    S = C.braided_square()
    J = JoinAlgebra(S, name="torus-join")

    print("== membership: boundary conditions at 0 and 1 ==")
    t = IntervalFunction.polynomial(PH, (PH.zero, PH.one))
    one_minus_t = IntervalFunction.polynomial(PH, (PH.one, PH.neg(PH.one)))
    # t * (U (x) 1) + (1-t) * (1 (x) U) is a member: the U leg fades out
    x = J.element([(t, ((1, 0), (0, 0))), (one_minus_t, ((0, 0), (1, 0)))])
    ok, wit = J.membership(x)
    print("  t*(U (x) 1) + (1-t)*(1 (x) U) is a member:", ok)
    bad = J.element([(t, ((0, 0), (1, 0)))])  # right leg alive at 1
    ok, wit = J.membership(bad)
    print("  t*(1 (x) U) is a member:", ok, " witness:", wit)

    print("\n== products stay in the join ==")
    ok, _ = J.membership(J.mul(x, x))
    print("  x*x is a member:", ok)

    print("\n== the two strong connections ==")
    P = half_model_comodule(C)
    for which in (1, 2):
        ell = strong_connection(C, which)
        rep = verify_strong_connection(P, ell, h_labels=WINDOW2)
        print(f"  connection {which}: all four conditions:", rep["ok"])

    print("\n== invariants of the degree-4 truncation ==")
    labels = [(h, a) for h in WINDOW2 for a in WINDOW2]
    dim = truncated_join_invariant_dimension(S, labels, 4)
    model = SuspensionModel(WINDOW2, (0, 0), 4).dimension()
    print("  join invariants:", dim, " suspension model:", model,
          " equal:", dim == model)


if __name__ == "__main__":
    main()
