"""Acceptance gate: the eight primary criteria, each at full scale with
its runtime budget, printing one verdict line per criterion."""

import time

from hgk import suites

OPTS = {}


def _run(*checks):
    t0 = time.monotonic()
    results = [fn(OPTS) for fn in checks]
    return results, time.monotonic() - t0


def _verdict(n, results, elapsed, summary):
    bad = [r["id"] for r in results if r["status"] == "fail"]
    status = "PASS" if not bad else f"FAIL ({', '.join(bad)})"
    print(f"[PRIMARY] criterion {n}: {status} — {summary} "
          f"({elapsed:.1f}s)")
    assert not bad, results


def test_criterion_1_hopf_axioms():
    results, dt = _run(
        suites.check_hopf_axioms_base,
        suites.check_hopf_axioms_dual,
        suites.check_hopf_axioms_double,
        suites.check_hopf_axioms_torus,
    )
    _verdict(1, results, dt,
             "Hopf axioms for the 9-dim algebra, its dual, the 81-dim "
             "double, and the torus on window 3")
    assert dt < 10


def test_criterion_2_relation_tables_and_double_entry():
    results, dt = _run(
        suites.check_relation_table_base,
        suites.check_relation_table_dual,
        suites.check_relation_table_double,
        suites.check_relation_table_twisted,
        suites.check_relation_table_square,
        suites.check_double_entry_double,
        suites.check_double_entry_twisted,
    )
    square = results[4]
    assert square["status"] == "flagged", square
    assert "replaced by derived" in square["detail"]
    _verdict(2, results, dt,
             "every printed relation reproduced over Q(zeta_3); the "
             "defective square entries flagged and replaced by derived "
             "values; 81x81 double entry on both doubles")
    assert dt < 60


def test_criterion_3_galois_object_properties():
    results, dt = _run(
        suites.check_bicomodule_twisted,
        suites.check_can_bijectivity_twisted,
        suites.check_trivial_invariants_twisted,
    )
    _verdict(3, results, dt,
             "bicomodule identity, coaction algebra-map property, "
             "canonical bijectivity on all 6561 tensor-basis elements "
             "both sides, trivial invariants")
    assert dt < 300


def test_criterion_4_translation_identities():
    results, dt = _run(
        suites.check_translation_identities_torus,
        suites.check_translation_identities_twisted,
    )
    for r in results:
        assert r["quantification"]["mode"] == "exhaustive"
    _verdict(4, results, dt,
             "all six translation-map identities exhaustive (twisted "
             "double: 81 basis elements; torus: window 3)")


def test_criterion_5_braiding_properties():
    results, dt = _run(
        suites.check_braiding_properties_torus,
        suites.check_braiding_properties_twisted,
    )
    for r in results:
        assert r["quantification"]["count"] >= 1000
    _verdict(5, results, dt,
             "pair identities exhaustive on basis pairs; hexagon/braid "
             "triples on generators plus 1000 seeded random basis "
             "triples per example")


def test_criterion_6_strong_connections_and_join_invariants():
    results, dt = _run(
        suites.check_strong_connection_1_torus,
        suites.check_strong_connection_2_torus,
        suites.check_strong_connection_1_twisted,
        suites.check_strong_connection_2_twisted,
        suites.check_join_invariants_torus,
        suites.check_join_invariants_twisted,
    )
    assert "77" in results[4]["detail"]
    assert "245" in results[5]["detail"]
    _verdict(6, results, dt,
             "both connections satisfy all four strong-connection "
             "conditions exhaustively; truncated join invariants match "
             "the suspension dimensions 77 (torus) and 245 (twisted "
             "double)")
    assert dt < 300


def test_criterion_7_phase_law_and_star():
    results, dt = _run(
        suites.check_phase_law_grid,
        suites.check_phase_law_random,
        suites.check_square_generator_relations,
        suites.check_carrier_star_unitarity,
        suites.check_braided_star_properties,
        suites.check_unbraided_product_witness,
    )
    assert results[0]["quantification"]["count"] == 6561
    assert results[1]["quantification"]["count"] == 5000
    _verdict(7, results, dt,
             "product phase law on the full 6561-tuple grid plus 5000 "
             "seeded window-2 tuples; generator relations; star "
             "involution and unitarity; the non-multiplicativity "
             "witness of the plain product")


def test_criterion_8_negative_controls():
    results, dt = _run(
        suites.check_negative_wrong_antipode,
        suites.check_negative_dropped_twist,
        suites.check_negative_truncated_relation,
    )
    for r in results:
        assert r["witnesses"], r
    _verdict(8, results, dt,
             "wrong antipode, dropped twist, and truncated mixed "
             "relation each fail with an explicit witness, never "
             "silently pass")
