"""Deterministic check and suite reports.

A check is a dict with keys ``id``, ``anchor``, ``status`` (one of
``pass`` / ``fail`` / ``flagged``), ``quantification`` (how the claim was
quantified: exhaustive or sampled, window, seed, count), optional
``witnesses`` and ``detail``.  A suite report bundles checks in a fixed
order with an overall verdict; ``flagged`` counts as passing (a known
defect in the source tables, confirmed against the derived value).

Rendered output is byte-deterministic for a fixed (input, flags, seed):
wall-clock time is never part of the rendered body.
"""

from __future__ import annotations

import json

STATUSES = ("pass", "fail", "flagged")


def check(check_id, status, anchor=None, quantification=None, witnesses=None,
          detail=None):
    if status not in STATUSES:
        raise ValueError(f"unknown status {status!r}")
    out = {"id": check_id, "status": status}
    if anchor:
        out["anchor"] = anchor
    if quantification:
        out["quantification"] = dict(quantification)
    if witnesses:
        out["witnesses"] = [_plain(w) for w in witnesses]
    if detail:
        out["detail"] = detail
    return out


def from_report(check_id, report, anchor=None, quantification=None,
                detail=None, expect_failure=False):
    """Turn a verifier report dict ({key: {ok, witnesses}, "ok": bool})
    into a check.  With ``expect_failure`` the check passes exactly when
    the verifier fails *and* produces a witness (a negative control must
    never silently pass)."""
    ok = report.get("ok", False)
    witnesses = []
    for key, sub in report.items():
        if key == "ok" or not isinstance(sub, dict) or sub.get("ok", True):
            continue
        for w in sub.get("witnesses", [])[:3]:
            witnesses.append({"property": key, "witness": _plain(w)})
    if expect_failure:
        status = "pass" if (not ok and witnesses) else "fail"
        if status == "pass":
            detail = ((detail + "; " if detail else "")
                      + "defect detected with witness, as required")
        return check(check_id, status, anchor=anchor,
                     quantification=quantification,
                     witnesses=witnesses if status == "pass" else
                     [{"property": "negative-control",
                       "witness": "sabotaged structure verified clean"}],
                     detail=detail)
    return check(check_id, "pass" if ok else "fail", anchor=anchor,
                 quantification=quantification,
                 witnesses=None if ok else witnesses, detail=detail)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return str(x)


def suite_report(suite, checks):
    counts = {s: 0 for s in STATUSES}
    for c in checks:
        counts[c["status"]] += 1
    return {
        "suite": suite,
        "checks": list(checks),
        "counts": counts,
        "ok": counts["fail"] == 0,
    }


def render_json(report):
    return json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"


def _quant_text(q):
    if not q:
        return ""
    bits = [q.get("mode", "")]
    for key in ("window", "degree", "seed", "count"):
        if key in q:
            bits.append(f"{key}={q[key]}")
    return " [" + ", ".join(b for b in bits if b) + "]"


def render_text(report):
    lines = [f"suite {report['suite']}: "
             f"{'PASS' if report['ok'] else 'FAIL'} "
             f"({report['counts']['pass']} pass, "
             f"{report['counts']['flagged']} flagged, "
             f"{report['counts']['fail']} fail)"]
    for c in report["checks"]:
        line = f"  {c['status'].upper():7s} {c['id']}"
        line += _quant_text(c.get("quantification"))
        lines.append(line)
        if c.get("detail"):
            lines.append(f"          {c['detail']}")
        for w in c.get("witnesses", [])[:3]:
            lines.append(f"          witness: {json.dumps(w, sort_keys=True, default=str)}")
    return "\n".join(lines) + "\n"
