import csv
import io
import json

from src.actions.taxonomy import INNATELY_TRANSITIVE, INTRANSITIVE, TRANSITIVE
from src.atlas.constructors import cyclic, dihedral, direct_product, general_linear
from src.atlas.registry import construct
from src.harness.report import CSV_FIELDS, AnalysisReport, analyze, flatten, from_json, to_json, write_csv


def test_analyze_general_linear():
    report = analyze(general_linear(2, 4))
    assert report.name == "GL(2,4)"
    assert (report.degree, report.order) == (15, 180)
    assert report.label == INNATELY_TRANSITIVE
    assert report.antiplinths == ((3, 5),)
    assert report.plinths == (60,)
    assert report.metrics.base_size == 2
    assert report.metrics.minimal_degree == 12
    assert report.classification.row_key == "GL24d15"
    assert not report.failed


def test_analyze_not_semiprimitive():
    report = analyze(dihedral(4), name="D(4)")
    assert report.label == TRANSITIVE
    assert report.classification is None
    assert len(report.verdicts) == 6


def test_analyze_intransitive():
    report = analyze(direct_product(cyclic(3), cyclic(3)))
    assert report.label == INTRANSITIVE
    assert report.verdicts == ()
    assert report.name == "group@6"


def test_report_round_trip():
    report = analyze(general_linear(2, 4))
    data = json.loads(json.dumps(report.to_dict()))
    assert AnalysisReport.from_dict(data) == report


def test_json_with_error_entries():
    entries = [analyze(dihedral(4), name="D(4)"), {"name": "Foo(3)", "error": "unknown constructor"}]
    text = to_json(entries)
    assert from_json(text) == entries
    assert json.loads(text)[0]["label"] == TRANSITIVE


def test_csv_rows():
    stream = io.StringIO()
    write_csv([analyze(general_linear(2, 4)), {"name": "bad", "error": "boom"}], stream)
    rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
    assert tuple(rows[0]) == CSV_FIELDS
    assert rows[0]["table_row"] == "GL24d15"
    assert rows[0]["fpr_value"] == "1/5"
    assert rows[0]["fpr"] in ("pass", "fail", "exempt", "informational")
    assert rows[0]["mindeg"] == "pass"
    assert rows[1]["error"] == "boom"
    assert rows[1]["label"] == ""


def test_csv_columns_are_unique():
    assert len(set(CSV_FIELDS)) == len(CSV_FIELDS)
    row = flatten(analyze(general_linear(2, 4)))
    assert row["fpr_value"] == "1/5"
    assert row["fpr"] in ("pass", "fail", "exempt", "informational")


def test_trivial_groups_have_no_minimal_degree():
    for expr in ("S(1)", "C(1)"):
        report = analyze(construct(expr), name=expr)
        assert report.metrics.minimal_degree is None
        assert report.metrics.fpr is None
        assert report.metrics.base_size == 0
        verdicts = {v.bound_id: v for v in report.verdicts}
        assert verdicts["mindeg"].status == "exempt"
        assert verdicts["fpr"].status == "exempt"
        assert not report.failed
        assert AnalysisReport.from_dict(report.to_dict()) == report


def test_trivial_group_csv_row():
    row = flatten(analyze(construct("group(3;())"), name="group(3;())"))
    assert row["minimal_degree"] is None
    assert row["fpr_value"] is None
    assert row["label"] == INTRANSITIVE
