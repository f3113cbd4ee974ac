import json

import pytest

from tanglekit.errors import MissingFixtureError
from tanglekit.golden import (
    FIXTURES,
    nonband_table,
    psi_table,
    report_golden,
    trefoil_hopf_table,
    write_golden,
    xer_table,
)


def test_shipped_corpus_matches():
    results = report_golden()
    assert [r.name for r in results] == list(FIXTURES)
    assert all(r.status == "pass" for r in results), [r.as_dict() for r in results if r.status != "pass"]


def test_written_corpus_matches(tmp_path):
    paths = write_golden(tmp_path / "corpus")
    assert len(paths) == len(FIXTURES)
    assert all(r.status == "pass" for r in report_golden(tmp_path / "corpus"))
    payload = json.loads(paths[0].read_text(encoding="utf-8"))
    assert payload["fixture"] == "torus6_to_7crossing"


def test_drift_is_reported_with_a_diff(tmp_path):
    corpus = tmp_path / "corpus"
    write_golden(corpus)
    path = corpus / "trefoil_to_hopf.json"
    path.write_text(path.read_text(encoding="utf-8").replace('"3/1"', '"3/2"'), encoding="utf-8")
    (corpus / "psi_torus8.json").unlink()
    results = {r.name: r for r in report_golden(corpus)}
    assert results["trefoil_to_hopf"].status == "fail"
    assert '-      "U": "3/2"' in results["trefoil_to_hopf"].diff
    assert results["psi_torus8"].status == "missing"
    assert results["psi_torus6"].status == "pass"


def test_empty_corpus(tmp_path):
    with pytest.raises(MissingFixtureError):
        report_golden(tmp_path)
    with pytest.raises(MissingFixtureError):
        report_golden(tmp_path / "absent")


def test_xer_table():
    table = xer_table(3)
    assert table["substrate"] == "T(2,6,lk=-3)"
    assert [p["knot"] for p in table["products"]] == ["7_2", "7_4"]
    assert table["products"][0]["pairs"] == ["(1,3)", "(3,1)"]
    assert table["rejected"] == ["(-1,-3)", "(-2,-2)", "(-3,-1)"]


def test_trefoil_hopf_table():
    rows = trefoil_hopf_table()["rows"]
    assert rows[4] == {"w": -1, "U": "3/1"}
    assert len(rows) == 11


def test_psi_table():
    rows = psi_table(4)["rows"]
    assert [r["status"] for r in rows] == ["no solution", "solved"]
    assert rows[1]["U"] == "-1/5"


def test_nonband_table():
    rows = nonband_table(5)["rows"]
    assert rows[2]["knot"] == "11a363"
    assert rows[2]["residues"] == [6, 29]
    assert rows[2]["divisor_bounds"] == [25, 45]
