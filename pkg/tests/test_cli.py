"""The command-line harness: subcommands, exit codes, deterministic
reports, the suite registry, and the emitted double presentation."""

import json

import pytest

from hgk import cli, reports, suites
from hgk.doubles import double_presented
from hgk.linalg import vec_eq
from hgk.presentations import parse_presentation

H9_PATH = "examples/h9.hgpa"
TORUS_PATH = "examples/torus.hgpa"


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- verify ----------------------------------------------------------------------

def test_verify_accepts_the_bundled_base_file(capsys):
    code, out, _ = run(["verify", H9_PATH], capsys)
    assert code == 0
    assert "hopf-axioms" in out
    assert "FAIL" not in out


def test_verify_accepts_the_bundled_torus_file(capsys):
    code, out, _ = run(["verify", TORUS_PATH, "--window", "1"], capsys)
    assert code == 0
    assert "can-inverse-left" in out and "can-inverse-right" in out


def test_verify_rejects_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.hgpa"
    bad.write_text("[ring]\ncyclotomic 3\n\n[generators]\nb nilpotent 3\n"
                   "a order 3\n\n[relations]\na*b = q*a*b\n")
    code, _, err = run(["verify", str(bad)], capsys)
    assert code == 2
    assert "not smaller" in err


def test_verify_rejects_missing_file(capsys):
    code, _, err = run(["verify", "no/such/file.hgpa"], capsys)
    assert code == 2


# -- build-double ----------------------------------------------------------------

def test_build_double_emits_a_roundtrippable_presentation(tmp_path, capsys):
    out_path = tmp_path / "double.hgpa"
    code, _, _ = run(["build-double", H9_PATH, "--out", str(out_path)],
                     capsys)
    assert code == 0
    pres = parse_presentation(str(out_path))
    D = double_presented()
    ring = D.ring
    for l in pres.algebra.basis():
        assert vec_eq(ring, pres.hopf.comult_label(l), D.comult_label(l))
        assert vec_eq(ring, pres.hopf.antipode_label(l),
                      D.antipode_label(l))
        assert ring.eq(pres.hopf.counit_label(l), D.counit_label(l))


def test_build_double_rejects_non_matching_input(capsys):
    code, _, err = run(["build-double", TORUS_PATH], capsys)
    assert code == 2
    assert "Hopf" in err


# -- run-suite -------------------------------------------------------------------

def test_run_suite_exit_zero_with_flagged(capsys):
    code, out, _ = run(["run-suite", "paper-sec4", "--example", "base"],
                       capsys)
    assert code == 0
    assert "PASS" in out


def test_suite_alias_and_short_names_agree(capsys):
    code1, out1, _ = run(["run-suite", "paper-sec3"], capsys)
    code2, out2, _ = run(["suite", "sec3"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_reports_are_deterministic_across_jobs(capsys):
    _, out1, _ = run(["run-suite", "paper-sec3", "--seed", "7"], capsys)
    _, out2, _ = run(["run-suite", "paper-sec3", "--seed", "7",
                      "--jobs", "4"], capsys)
    assert out1 == out2


def test_json_report_parses_and_agrees_with_text(capsys):
    code, out, _ = run(["run-suite", "paper-sec3", "--report", "json"],
                       capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["suite"] == "paper-sec3"
    assert {c["status"] for c in rep["checks"]} <= {"pass", "flagged"}


def test_unknown_suite_is_a_usage_error(capsys):
    code, _, err = run(["run-suite", "paper-sec9"], capsys)
    assert code == 2
    assert "unknown suite" in err


def test_wall_time_goes_to_stderr_not_the_report(capsys):
    _, out, err = run(["run-suite", "paper-sec3"], capsys)
    assert "wall time" in err
    assert "wall time" not in out


# -- list-checks -----------------------------------------------------------------

def test_list_checks_enumerates_every_registered_check(capsys):
    code, out, _ = run(["list-checks"], capsys)
    assert code == 0
    listed = [line.split()[0] for line in out.strip().splitlines()]
    assert listed == [c["id"] for c in suites.list_checks()]
    assert len(listed) == len(set(listed)) == len(suites.CHECKS)
    assert all("anchor=" in line for line in out.strip().splitlines())


def test_every_check_belongs_to_exactly_one_suite():
    names = [c["id"] for c in suites.list_checks()]
    assert len(names) == len(set(names))
    for c in suites.list_checks():
        assert c["suite"] in suites.SUITES


# -- report layer ----------------------------------------------------------------

def test_flagged_counts_as_passing():
    rep = reports.suite_report("s", [reports.check("x", "flagged")])
    assert rep["ok"]
    rep = reports.suite_report("s", [reports.check("x", "fail")])
    assert not rep["ok"]


def test_negative_control_must_not_silently_pass():
    clean = {"axiom": {"ok": True, "witnesses": []}, "ok": True}
    out = reports.from_report("neg", clean, expect_failure=True)
    assert out["status"] == "fail"
    broken = {"axiom": {"ok": False, "witnesses": [{"label": 1}]},
              "ok": False}
    out = reports.from_report("neg", broken, expect_failure=True)
    assert out["status"] == "pass"
