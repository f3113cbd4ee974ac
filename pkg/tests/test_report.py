import json

from tanglekit import __version__
from tanglekit.diagram_oracle import OrientedTorusLink2
from tanglekit.report import (
    SCHEMA,
    exit_code,
    format_value,
    make_report,
    solution_results,
    to_json,
    to_text,
    verification_summary,
)
from tanglekit.surgery_solver import band_solve, verify_families


def test_make_report_fields():
    report = make_report("eval", {"expr": "1/2"}, results="1/2")
    assert report == {
        "schema": SCHEMA,
        "version": __version__,
        "command": "eval",
        "input": {"expr": "1/2"},
        "status": "ok",
        "reason": None,
        "results": "1/2",
        "verification": None,
    }


def test_format_value():
    assert format_value(None) == "(nil)"
    assert format_value(True) == "true"
    assert format_value([]) == "(empty)"
    assert format_value(["a", "b"]) == "1) a\n2) b"
    assert format_value({"a": 1, "b": {"c": 2}}) == "a: 1\nb:\n  c: 2"
    assert format_value([{"x": 1}]) == "1)\n  x: 1"


def test_text_shows_status_only_when_informative():
    assert to_text(make_report("eval", {}, results="6/7")) == "6/7\n"
    text = to_text(make_report("psi-solve", {}, "no-solution", "no solution", {"families": []}))
    assert text.endswith("status: no-solution (no solution)\n")


def test_exit_codes():
    for status, code in [("ok", 0), ("solved", 0), ("no-solution", 1), ("obstructed", 1),
                         ("failed", 1), ("unknown", 3), ("unsupported", 3), ("error", 3)]:
        assert exit_code(make_report("x", {}, status)) == code


def test_solution_results_carry_verification():
    result = band_solve(2, 2, -1, OrientedTorusLink2(3, -3))
    checks = verify_families(result.families, cap=0)
    out = solution_results(result, checks)
    [family] = out["families"]
    assert family["theorem_case"] == "band:k=m+n-1"
    assert family["move"] == "(0/1, -1/1)"
    [instance] = family["instances"]
    assert instance["U"] == "(-1/3 + -1/3) o (-1,2,0)"
    assert instance["verified"] == "verified"
    assert instance["params"] == {"swap": 0}
    summary = verification_summary(checks)
    assert summary == {"instances": 1, "verified": 1, "cap_exceeded": 0, "failed": 0}


def test_json_is_stable():
    report = make_report("gamma", {"m": 1}, results={"unknotted": True})
    assert json.loads(to_json(report)) == report
    assert to_json(report).endswith("}\n")
