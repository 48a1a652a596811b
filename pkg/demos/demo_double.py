"""Walk through the finite example: the nine-dimensional Hopf algebra,
its dual, the 81-dimensional double on generators A, B, K, F, and the
twisted double that is a Galois object over it.

Run as:  python3 demos/demo_double.py
"""

from hgk.doubles import (
    anti_double_comodule,
    double_presented,
    dual_identification,
    taft_dual_presented,
    taft_hopf,
)
from hgk.hopf import pairing, verify_hopf_axioms
from hgk.presentations import serialize_hopf
from hgk.scalars import CyclotomicField

Z3 = CyclotomicField(3)


def main():
    H = taft_hopf()
    print("== the base: a of order 3, b nilpotent, a b = q b a ==")
    A = H.algebra
    print("  dim =", len(A.basis()))
    print("  S(b) =", A.format_element(
        H.antipode_label(A.generator_label("b"))))
    print("  Hopf axioms:", verify_hopf_axioms(H)["ok"])

    print("\n== the dual on k, f and the pairing ==")
    Hd = taft_dual_presented()
    D, theta = dual_identification(H, Hd)
    print("  dual identified with coordinate functionals:",
          theta is not None)
    from hgk.doubles import dual_coordinate_images
    duals = dual_coordinate_images()
    for phi in ("k", "f"):
        for x in ("a", "b"):
            val = pairing(duals[phi], A.generator_element(x), Z3)
            print(f"  <{phi}, {x}> =", Z3.format(val))

    print("\n== the double, as a presentation file ==")
    DP = double_presented()
    print(serialize_hopf(DP, ("cyclotomic", 3),
                         flags={"A": {"grouplike": True},
                                "K": {"grouplike": True}}))

    print("== the twisted double as a Galois object ==")
    C = anti_double_comodule()
    from hgk.presentations import format_tensor_text
    lB = C.algebra.generator_label("B")
    print("  left coaction of B:",
          format_tensor_text(C.hopf.algebra, C.algebra, Z3,
                             C.left_coaction_label(lB)))
    inv = C.coinvariant_basis(side="right")
    print("  right coaction invariants: dim", len(inv),
          "(spanned by the unit)")


if __name__ == "__main__":
    main()
