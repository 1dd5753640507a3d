import json

import pytest

from conftest import TAG23
from qwalk.enumeration import count_excursions
from qwalk.errors import UnmatchedFixture
from qwalk.fixtures import FIXTURES, TABLE2_GROUPS, WORKED_EXAMPLE, fixture, group_of
from qwalk.report import ClassificationReport, check_tables, classify, matched_tag, recover_fixture_stepsets
from qwalk.stepset import SIMPLE_WALK, StepSet


# -- fixtures ---------------------------------------------------------------

def test_fixture_table_shape():
    assert len(FIXTURES) == 51
    for fx in FIXTURES.values():
        assert len(fx.sequence) == 9 and fx.sequence[0] == 1
        if fx.starred:
            assert all(fx.sequence[k] == 0 for k in (1, 3, 5, 7))
        assert fx.mu_rho.degree >= 1 and fx.mu_c.degree >= 1


def test_fixture_lookup():
    assert fixture("7*").starred
    assert fixture("23").rho_decimal == "4.729032"
    assert FIXTURES["30"].mu_rho.format() == "t-5"
    assert FIXTURES["40"].mu_c.format() == "4*t+1"
    assert set(TABLE2_GROUPS[group_of("40")][0]) >= {"40", "42"}


def test_worked_example_constants():
    assert WORKED_EXAMPLE["tag"] == "23"
    assert FIXTURES["23"].sequence == (1, 0, 2, 1, 10, 14, 75, 178, 738)


def test_recover_worked_example(fixture_sets):
    assert len(fixture_sets) == 51
    assert TAG23 in fixture_sets["23"]
    for s in fixture_sets["23"]:
        assert count_excursions(s, 8).terms == FIXTURES["23"].sequence


def test_recover_transpose_pair(fixture_sets):
    sets = set(fixture_sets["3"])
    assert sets == set(fixture_sets["6"])
    assert {s.transpose() for s in sets} == sets
    for s in sets:
        assert count_excursions(s, 8).terms == (1, 0, 1, 2, 2, 13, 21, 67, 231)


def test_recover_reports_unmatched(monkeypatch):
    import qwalk.report as report
    from dataclasses import replace

    broken = dict(FIXTURES)
    broken["3"] = replace(FIXTURES["3"], sequence=(1, 2, 3, 4, 5, 6, 7, 8, 9))
    monkeypatch.setattr(report, "FIXTURES", broken)
    report.recover_fixture_stepsets.cache_clear()
    try:
        with pytest.raises(UnmatchedFixture):
            report.recover_fixture_stepsets()
    finally:
        monkeypatch.undo()
        report.recover_fixture_stepsets.cache_clear()


def test_matched_tag():
    assert matched_tag(TAG23) == "23"
    assert matched_tag(SIMPLE_WALK) is None
    assert matched_tag(StepSet(((-1, -1), (-1, 0), (0, 1), (1, 0)))) == "3,6"


# -- classify ---------------------------------------------------------------

def test_classify_worked_example():
    r = classify(TAG23)
    assert r.conclusion == "NotDFinite"
    assert r.rho["decimal"] == "4.729031538"
    assert r.alpha["decimal"] == "-3.320191962"
    assert r.matched_tag == "23"
    assert r.schema == "1"
    assert r.failure is None
    assert r.chi == "1/x + 1/y + x/y + y + x"


def test_classify_simple_walk():
    r = classify(SIMPLE_WALK)
    assert r.conclusion == "NoConclusion"
    assert r.alpha["decimal"] == "-3.000000000"
    assert r.alpha["exact"] == "-3"
    assert r.certificate["method"] == "RationalWitness"
    assert r.matched_tag is None


def test_classify_singular_half_plane():
    r = classify(StepSet(((-1, 1), (1, 1), (1, -1))))
    assert r.conclusion == "HypothesisFailed"
    assert r.singular is True
    assert r.half_plane == [1, 1]
    assert r.rho is None and r.certificate is None


def test_json_roundtrip_and_determinism():
    for s in (TAG23, SIMPLE_WALK, StepSet(((1, 1),))):
        text = classify(s).to_json()
        again = ClassificationReport.from_json(text)
        assert again.to_json() == text
        assert classify(s).to_json() == text
        assert json.loads(text)["schema"] == "1"


def test_classify_with_fit():
    r = classify(SIMPLE_WALK, fit_n=400)
    assert r.asymptotic_fit["note"] == "non-certified"
    assert abs(r.asymptotic_fit["alpha_hat"] + 3) < 0.05


def test_text_report_mentions_verdict():
    text = classify(TAG23).to_text()
    assert "NotDFinite" in text and "4.729031538" in text


# -- table checks -------------------------------------------------------------

def test_check_table2_pair():
    res = check_tables(2, "(40,42)")
    assert [r.tag for r in res.rows] == ["40", "42"]
    assert res.ok
    assert FIXTURES["40"].mu_c.format() == "4*t+1"


def test_check_table2_single():
    res = check_tables(2, "30")
    assert res.ok
    row = res.rows[0]
    assert all(v["mu_rho_divides"] for k, v in row.details.items() if k != "group")


def test_check_table1_subset():
    res = check_tables(1, ["23", "7*", "30"])
    assert res.ok and res.total == 3
    assert res.summary() == "table 1: 3/3 pass"


def test_check_tables_rejects_unknown():
    with pytest.raises(KeyError):
        check_tables(1, "99")
    with pytest.raises(ValueError):
        check_tables(3)


def test_fixture_stepsets_recovered_once():
    assert recover_fixture_stepsets() is recover_fixture_stepsets()
