import json

import jsonschema
import pytest

from conftest import oid, stmt
from ocmeaning.analysis import diff_collections, import_impact
from ocmeaning.export import to_json_dict
from ocmeaning.language import parse_collection
from ocmeaning.meaning import analytic_theory, ebms
from ocmeaning.model import OntologicalComponent
from ocmeaning.reports import (
    diff_from_dict, diff_text, diff_to_dict, ebms_from_dict, ebms_to_dict, impact_from_dict, impact_text,
    impact_to_dict, load_schema, theory_from_dict,
)


def check(doc, name):
    jsonschema.Draft202012Validator.check_schema(load_schema(name))
    jsonschema.validate(json.loads(json.dumps(doc)), load_schema(name))


def test_ebms_document(apricot):
    t = analytic_theory(apricot, oid("OID_02"))
    e = ebms(apricot, oid("OID_02"), report=True, theory=t)
    doc = ebms_to_dict(e, t)
    check(doc, "ebms")
    assert ebms_from_dict(doc) == e
    assert theory_from_dict(doc["theory"]) == t


def test_incoherent_ebms_document(apricot_text):
    c, _ = parse_collection(apricot_text + "OID_02 | Analytic | has_NC | OID_99\n")
    doc = ebms_to_dict(ebms(c, oid("OID_02")))
    check(doc, "ebms")
    assert doc["coherent"] is False and doc["inferred"] == []


def test_diff_document(apricot, apricot_text):
    new, _ = parse_collection(apricot_text.replace("OID_02 | Analytic | has_NC | OID_01\n", "") + 'OID_01 | HRI | "fruit"@en\n')
    reports = diff_collections(apricot, new)
    doc = {"reports": [diff_to_dict(r) for r in reports]}
    check(doc, "diff")
    assert [diff_from_dict(d) for d in doc["reports"]] == reports
    assert "kind: MeaningAffecting" in diff_text(reports[1])


def test_impact_document(apricot):
    extra = OntologicalComponent(oid("OID_02"), {stmt('OID_02 | Analytic | has_NSC | "A stone fruit."@en')})
    report = import_impact(apricot, [extra])
    doc = impact_to_dict(report)
    check(doc, "impact")
    back = impact_from_dict(doc)
    assert back.verdict == report.verdict
    assert back.conflicts == report.conflicts
    assert back.merged == report.merged
    assert {o: a.delta for o, a in back.affected.items()} == {o: a.delta for o, a in report.affected.items()}
    text = impact_text(report)
    assert 'CONFLICT incoming: OID_02 | Analytic | has_NSC | "A stone fruit."@en' in text


def test_export_document(apricot):
    check(to_json_dict(apricot), "export")


def test_schema_rejects_bad_verdict(apricot):
    doc = impact_to_dict(import_impact(apricot, []))
    doc["verdict"] = "Maybe"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, load_schema("impact"))
