"""The presentation file format: the two bundled example files parse to
the structures built in code, serialization round-trips byte-stably, and
malformed input is rejected with a line-annotated error."""

import itertools

import pytest

from hgk.doubles import double_presented, taft_hopf
from hgk.linalg import vec_eq
from hgk.presentations import (
    PresentationError,
    parse_element,
    parse_presentation,
    parse_presentation_text,
    serialize_hopf,
)
from hgk.scalars import CyclotomicField, PhaseRing
from hgk.torus import quantum_torus_comodule, torus_hopf

Z3 = CyclotomicField(3)
PH = PhaseRing()

H9_PATH = "examples/h9.hgpa"
TORUS_PATH = "examples/torus.hgpa"

WINDOW1 = [(k, l) for k in (-1, 0, 1) for l in (-1, 0, 1)]


def hopf_equal(H1, H2, labels):
    ring = H1.ring
    for l in labels:
        if not (vec_eq(ring, H1.comult_label(l), H2.comult_label(l))
                and ring.eq(H1.counit_label(l), H2.counit_label(l))
                and vec_eq(ring, H1.antipode_label(l),
                           H2.antipode_label(l))):
            return False
    for l1, l2 in itertools.product(labels, labels):
        if not vec_eq(ring, H1.algebra.mul_labels(l1, l2),
                      H2.algebra.mul_labels(l1, l2)):
            return False
    return True


# -- bundled files ---------------------------------------------------------------

def test_bundled_base_file_matches_the_code_construction():
    pres = parse_presentation(H9_PATH)
    H0 = taft_hopf()
    assert pres.algebra.generators == H0.algebra.generators
    assert hopf_equal(pres.hopf, H0, pres.algebra.basis())


def test_bundled_torus_file_matches_the_code_construction():
    pres = parse_presentation(TORUS_PATH)
    C0 = quantum_torus_comodule()
    C = pres.comodule
    assert C is not None
    for l in WINDOW1:
        assert vec_eq(PH, C.left_coaction_label(l),
                      C0.left_coaction_label(l))
        assert vec_eq(PH, C.right_coaction_label(l),
                      C0.right_coaction_label(l))
    for l1, l2 in itertools.product(WINDOW1, WINDOW1):
        assert vec_eq(PH, C.algebra.mul_labels(l1, l2),
                      C0.algebra.mul_labels(l1, l2))
    assert hopf_equal(pres.base.hopf, torus_hopf(), WINDOW1)


def test_bundled_torus_file_can_inverses_work():
    C = parse_presentation(TORUS_PATH).comodule
    inv = C.left_can_inverse()
    can = C.left_can()
    for h in WINDOW1:
        for a in WINDOW1:
            assert vec_eq(PH, inv(can({(h, a): PH.one})),
                          {(h, a): PH.one})


def test_bundled_torus_file_star_images():
    pres = parse_presentation(TORUS_PATH)
    su = pres.star({(1, 0): PH.one})
    assert vec_eq(PH, su, {(-1, 0): PH.one})
    sbu = pres.base.star({(1, 0): PH.one})
    assert vec_eq(PH, sbu, {(-1, 0): PH.one})


# -- serialization ----------------------------------------------------------------

def test_serialize_parse_roundtrip_is_byte_stable_for_the_double():
    D = double_presented()
    flags = {"A": {"grouplike": True}, "K": {"grouplike": True}}
    text = serialize_hopf(D, ("cyclotomic", 3), flags=flags)
    pres = parse_presentation_text(text)
    assert hopf_equal(pres.hopf, D, pres.algebra.basis())
    again = serialize_hopf(pres.hopf, pres.ring_decl, flags=pres.flags)
    assert again == text


def test_serialize_parse_roundtrip_for_the_base():
    H = taft_hopf()
    flags = {"a": {"grouplike": True}}
    text = serialize_hopf(H, ("cyclotomic", 3), flags=flags)
    pres = parse_presentation_text(text)
    assert hopf_equal(pres.hopf, H, pres.algebra.basis())
    assert serialize_hopf(pres.hopf, pres.ring_decl,
                          flags=pres.flags) == text


# -- expression parsing -----------------------------------------------------------

def test_parse_element_normalizes_words():
    A = taft_hopf().algebra
    got = parse_element(A, "a*b - q*b*a")
    assert got == {}
    got = parse_element(A, "q^2*b^2*a + b^2*a")
    assert vec_eq(Z3, got, {(2, 1): Z3.add(Z3.pow(Z3.generator(), 2),
                                           Z3.one)})


def test_parse_element_rejects_unknown_generator():
    A = taft_hopf().algebra
    with pytest.raises(PresentationError) as err:
        parse_element(A, "a*c", line=7)
    assert err.value.line == 7
    assert "unknown" in err.value.message


# -- rejection cases --------------------------------------------------------------

BAD_ORDER = """\
[ring]
cyclotomic 3

[generators]
b nilpotent 3
a order 3

[relations]
a*b = q*a*b
"""


def test_rhs_not_smaller_is_rejected_with_line_number():
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(BAD_ORDER)
    assert err.value.line == 9
    assert "not smaller" in err.value.message


def test_lhs_must_be_a_misordered_generator_pair():
    text = BAD_ORDER.replace("a*b = q*a*b", "b*a = q*a*b")
    with pytest.raises(PresentationError):
        parse_presentation_text(text)


def test_syntax_error_carries_the_line():
    text = BAD_ORDER.replace("a*b = q*a*b", "a*b = q*b*(a")
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(text)
    assert err.value.line == 9


def test_unknown_section_is_rejected():
    with pytest.raises(PresentationError):
        parse_presentation_text("[ring]\nrational\n\n[bogus]\nx\n")


def test_incomplete_hopf_data_is_rejected():
    text = BAD_ORDER.replace("a*b = q*a*b", "a*b = q*b*a")
    text += "\n[comult]\nb = a (x) b + b (x) a^2\n"
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(text)
    assert "incomplete" in err.value.message


def test_monomial_transport_requires_invertible_generators():
    text = open(TORUS_PATH).read().replace("U invertible", "U order 3")
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(text)
    assert "invertible" in str(err.value)
