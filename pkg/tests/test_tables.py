import pytest

from enrq import tables


def test_rows_match_classification():
    rows = {(r.kind, r.type_tag): r for r in tables.table_rows()}
    assert len(rows) == 8
    ss_e8 = rows[("supersingular", "E~8")]
    assert [g.structure for g in ss_e8.aut_ct] == ["Z/11"]
    assert [g.structure for g in ss_e8.aut_nt] == ["Z/11"]
    cl_d8 = rows[("classical", "D~8")]
    assert [g.structure for g in cl_d8.aut_ct] == ["Z/2"]
    ss_d8 = rows[("supersingular", "D~8")]
    assert [g.structure for g in ss_d8.aut_ct] == ["Q8"]
    d44 = rows[("classical", "D~4+D~4")]
    assert [g.structure for g in d44.aut_ct] == ["1"]
    assert [g.structure for g in d44.aut_nt] == ["Z/2xZ/2"]
    e71 = rows[("classical", "E~7(1)")]
    assert [g.structure for g in e71.aut_ct] == ["1"]
    assert [g.structure for g in e71.aut_nt] == ["Z/2"]
    e6 = rows[("supersingular", "E~6")]
    assert [g.structure for g in e6.aut_ct] == ["Z/5"]


def test_e72_row_keeps_the_disjunction():
    row = next(r for r in tables.table_rows() if r.type_tag == "E~7(2)")
    assert [g.structure for g in row.aut_ct] == ["Z/7", "1"]
    assert [g.structure for g in row.aut_nt] == ["Z/7", "1"]


def test_group_tags():
    assert tables.GroupTag("Q8").order == 8
    assert tables.GroupTag("Z/2xZ/2").order == 4
    with pytest.raises(ValueError):
        tables.GroupTag("Z/13")


def test_consistency_check_passes_on_shipped_data():
    entries = tables.consistency_check()
    assert entries
    failures = [(label, detail) for label, ok, detail in entries if not ok]
    assert failures == []


def test_quotient_checks_present():
    labels = [label for label, _, _ in tables.consistency_check()]
    assert any("|nt|/|ct| = 11/11" in l for l in labels)
    assert any("|nt|/|ct| = 2/1" in l for l in labels)
    assert any("char != 2" in l for l in labels)


def test_schema_and_figure_placeholders():
    data = tables.raw_data()
    assert data["schema"] == "enrq-tables-v1"
    placeholders = tables.figures_unavailable()
    assert placeholders
    assert all(flag == "figure content unavailable" for _, flag in placeholders)
