"""Command-line harness: parse presentation files, run named verification
suites, and emit deterministic reports and relation tables.

Exit codes: 0 all checks pass (flagged counts as pass), 1 any check fails,
2 usage or parse error.  Reports are byte-deterministic for fixed inputs,
flags, and seed; wall time goes to stderr only.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time

from . import reports, suites
from .doubles import double_presented
from .galois import verify_can_inverse, verify_comodule_axioms
from .hopf import verify_hopf_axioms
from .linalg import vec_eq
from .presentations import (
    PresentationError,
    parse_presentation,
    serialize_hopf,
)
from .rewriting import confluence_check


def _write_out(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(report, fmt):
    if fmt in ("json", "json-like"):
        return reports.render_json(report)
    return reports.render_text(report)


# -- verify ----------------------------------------------------------------------


def _star_checks(name, algebra, star, labels, pairs):
    ring = algebra.ring
    witnesses = []
    for l in labels:
        e = {l: ring.one}
        if not vec_eq(ring, star(star(e)), e):
            witnesses.append({"property": "involution", "label": l})
            break
    for l1, l2 in pairs:
        lhs = star(algebra.mul_labels(l1, l2))
        rhs = algebra.mul(star({l2: ring.one}), star({l1: ring.one}))
        if not vec_eq(ring, lhs, rhs):
            witnesses.append({"property": "antimultiplicative",
                              "labels": (l1, l2)})
            break
    return reports.check(
        name, "pass" if not witnesses else "fail", anchor="star-axioms",
        quantification={"mode": "exhaustive", "count": len(pairs)},
        witnesses=witnesses or None)


def _verify_presentation(pres, window):
    checks = []
    A = pres.algebra
    labels = A.basis(window=window)
    pairs = list(itertools.product(labels, labels))

    rep = confluence_check(A, max_word_len=3, samples=100, seed=0,
                           window=window)
    checks.append(reports.check(
        "relations-confluent",
        "pass" if rep["joinable"] and rep["oracle_match"] is not False
        else "fail",
        anchor="presentation-format",
        quantification={"mode": "sampled", "window": window, "seed": 0},
        witnesses=rep["witnesses"][:3] or None,
        detail="declared rewriting rules are terminating and joinable on "
               "sampled overlaps"))

    if pres.hopf is not None:
        checks.append(reports.from_report(
            "hopf-axioms", verify_hopf_axioms(pres.hopf, labels=labels,
                                              product_pairs=pairs),
            anchor="hopf-axioms",
            quantification={"mode": "exhaustive", "window": window}))
    if pres.base is not None and pres.base.hopf is not None:
        b_labels = pres.base.algebra.basis(window=window)
        b_pairs = list(itertools.product(b_labels, b_labels))
        checks.append(reports.from_report(
            "base-hopf-axioms",
            verify_hopf_axioms(pres.base.hopf, labels=b_labels,
                               product_pairs=b_pairs),
            anchor="hopf-axioms",
            quantification={"mode": "exhaustive", "window": window}))
        if pres.base.star is not None:
            checks.append(_star_checks("base-star-axioms",
                                       pres.base.algebra, pres.base.star,
                                       b_labels, b_pairs))
    if pres.star is not None:
        checks.append(_star_checks("star-axioms", A, pres.star, labels,
                                   pairs))
    if pres.comodule is not None:
        C = pres.comodule
        sides = tuple(s for s in ("left", "right")
                      if pres.coaction_images.get(s))
        checks.append(reports.from_report(
            "comodule-axioms",
            verify_comodule_axioms(C, labels=labels, pairs=pairs,
                                   sides=sides),
            anchor="comodule-axioms",
            quantification={"mode": "exhaustive", "window": window}))
        h_labels = C.hopf.algebra.basis(window=window)
        for side in sides:
            if not pres.can_inverse.get(side):
                continue
            checks.append(reports.from_report(
                f"can-inverse-{side}",
                verify_can_inverse(C, side=side, h_labels=h_labels,
                                   a_labels=labels, pair_labels=pairs),
                anchor="can-bijectivity",
                quantification={"mode": "exhaustive", "window": window}))
    return checks


def cmd_verify(args):
    try:
        pres = parse_presentation(args.file)
    except PresentationError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    window = args.window if args.window is not None else 2
    report = reports.suite_report("verify", _verify_presentation(pres,
                                                                 window))
    _write_out(_render(report, args.report), args.out)
    return 0 if report["ok"] else 1


# -- build-double ----------------------------------------------------------------


def _base_pattern_rename(pres):
    """Map the file's two generators onto the reference pattern (one
    nilpotent of index 3, one group-like of order 3, q-commuting); returns
    (nilpotent name, grouplike name) or raises ValueError."""
    if pres.hopf is None:
        raise ValueError("file does not define a Hopf algebra")
    A = pres.algebra
    ring = A.ring
    decl = " ".join(str(p) for p in pres.ring_decl)
    if decl != "cyclotomic 3":
        raise ValueError(f"needs ring 'cyclotomic 3', file declares "
                         f"'{decl}'")
    if len(A.generators) != 2:
        raise ValueError("needs exactly two generators")
    roles = {A.powers.get(i, ("free",)): g
             for i, g in enumerate(A.generators)}
    nilp = roles.get(("nilpotent", 3))
    grp = roles.get(("order", 3))
    if nilp is None or grp is None:
        raise ValueError("needs one generator nilpotent of index 3 and one "
                         "of multiplicative order 3")
    q = ring.generator()
    b = A.generator_element(nilp)
    a = A.generator_element(grp)
    H = pres.hopf
    A_lbl = A.generator_label
    ab = A.mul(a, b)
    qba = {l: ring.mul(q, c) for l, c in A.mul(b, a).items()}
    if not vec_eq(ring, ab, qba):
        raise ValueError(f"needs the relation {grp}*{nilp} = "
                         f"q*{nilp}*{grp}")
    la, lb = A_lbl(grp), A_lbl(nilp)
    a2 = A.mul(a, a)
    la2, = a2
    expectations = (
        ("comultiplication", H.comult_label(la), {(la, la): ring.one}),
        ("comultiplication", H.comult_label(lb),
         {(la, lb): ring.one, (lb, la2): ring.one}),
        ("antipode", H.antipode_label(la), a2),
        ("antipode", H.antipode_label(lb),
         {lb: ring.neg(ring.pow(q, 2))}),
    )
    for what, got, want in expectations:
        if not vec_eq(ring, got, want):
            raise ValueError(f"{what} does not match the reference pattern")
    if not (ring.eq(H.counit_label(la), ring.one)
            and ring.eq(H.counit_label(lb), ring.zero)):
        raise ValueError("counit does not match the reference pattern")
    return nilp, grp


def cmd_build_double(args):
    try:
        pres = parse_presentation(args.file)
    except (PresentationError, OSError) as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        _base_pattern_rename(pres)
    except ValueError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    D = double_presented()
    text = serialize_hopf(D, pres.ring_decl,
                          flags={"A": {"grouplike": True},
                                 "K": {"grouplike": True}})
    _write_out(text, args.out)
    return 0


# -- run-suite / list-checks -------------------------------------------------------


def cmd_run_suite(args):
    t0 = time.monotonic()
    try:
        report = suites.run_suite(args.name, window=args.window,
                                  degree=args.degree, seed=args.seed,
                                  jobs=args.jobs, example=args.example)
    except KeyError as exc:
        print(f"unknown suite {exc.args[0]!r}; known: "
              f"{', '.join(suites.SUITES)}, all", file=sys.stderr)
        return 2
    _write_out(_render(report, args.report), args.out)
    print(f"wall time {time.monotonic() - t0:.1f}s", file=sys.stderr)
    return 0 if report["ok"] else 1


def cmd_list_checks(args):
    lines = []
    for c in suites.list_checks():
        lines.append(f"{c['id']:42s} suite={c['suite']} "
                     f"example={c['example']} anchor={c['anchor']}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


# -- entry point -------------------------------------------------------------------


def _add_report_flags(p):
    p.add_argument("--report", choices=("text", "json", "json-like"),
                   default="text", help="output format")
    p.add_argument("--out", default=None,
                   help="write the report to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hgk",
        description="Exact-arithmetic verification of Hopf-Galois "
                    "structures: presentation files, doubles, braided "
                    "squares, and named check suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify",
                       help="parse a presentation file and verify the "
                            "structures it declares")
    p.add_argument("file")
    p.add_argument("--window", type=int, default=None,
                   help="exponent window for infinite-dimensional checks")
    _add_report_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("build-double",
                       help="emit the presented double of the bundled "
                            "two-generator pattern as a presentation file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_build_double)

    for alias in ("run-suite", "suite"):
        p = sub.add_parser(alias, help="run a named verification suite")
        p.add_argument("name",
                       help="paper-sec1..paper-sec4 (or sec1..sec4) or all")
        p.add_argument("--window", type=int, default=None)
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--example", default=None,
                       help="restrict to checks on one example "
                            "(torus, twisted-double, base)")
        _add_report_flags(p)
        p.set_defaults(fn=cmd_run_suite)

    p = sub.add_parser("list-checks", help="enumerate all known checks")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_list_checks)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
