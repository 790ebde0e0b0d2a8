import random

import pytest

from conftest import EX, oid, stmt
from helpers import random_statement
from ocmeaning.analysis import (
    BREAKING_KINDS, Delta, DiffKind, Verdict, diff_collections, diff_components, import_impact,
)
from ocmeaning.language import parse_collection
from ocmeaning.model import Collection, OntologicalComponent


def load(lines):
    c, diags = parse_collection("\n".join(lines))
    assert not [d for d in diags if d.is_error]
    return c


def drop(text, key):
    return "\n".join(line for line in text.splitlines() if line.strip() != EX[key])


def test_delta():
    d = Delta.between({1, 2}, {2, 3})
    assert d == Delta(frozenset({3}), frozenset({1}))
    assert d.swapped() == Delta.between({2, 3}, {1, 2})
    assert Delta().is_empty


def test_import_extends(apricot, ex):
    base = Collection({o: apricot.components[o] for o in (oid("OID_01"), oid("OID_99"))})
    report = import_impact(base, [apricot.components[oid("OID_02")]])
    assert report.verdict is Verdict.EXTENDED
    assert report.verdict_for(oid("OID_02")) is Verdict.EXTENDED
    assert report.verdict_for(oid("OID_01")) is Verdict.NO_CHANGE
    assert report.verdict_for(oid("OID_99")) is Verdict.NO_CHANGE
    after = report.affected[oid("OID_02")].after
    assert after.members == {ex[k] for k in ("EX1*", "EX2*", "EX4", "EX5")}
    assert report.affected[oid("OID_02")].delta.added == {ex["EX1*"], ex["EX2*"]}
    assert report.coherence_breaks == frozenset()


def test_empty_import(apricot):
    report = import_impact(apricot, [])
    assert report.verdict is Verdict.NO_CHANGE
    assert not report.affected and not report.merged


def test_import_introducing_incoherence(apricot):
    extra = OntologicalComponent(oid("OID_02"), {stmt("OID_02 | Analytic | has_NC | OID_99")})
    report = import_impact(apricot, [extra])
    assert report.verdict is Verdict.INCOHERENCE_INTRODUCED
    assert report.coherence_breaks == {oid("OID_02")}
    assert report.merged[oid("OID_02")] == extra.oid_statements


def test_import_reaches_dependents(apricot):
    # OID_02 depends on OID_01; giving OID_01 a new NC changes OID_02's meaning too
    extra = OntologicalComponent(oid("OID_01"), {stmt("OID_01 | Analytic | has_NC | OID_77")})
    report = import_impact(apricot, [extra])
    assert report.verdict_for(oid("OID_01")) is Verdict.EXTENDED
    assert report.verdict_for(oid("OID_02")) is Verdict.EXTENDED
    assert stmt("OID_02 | Analytic | has_NC | OID_77") in report.affected[oid("OID_02")].delta.added


def test_conflicting_definitions_are_reported(apricot):
    extra = OntologicalComponent(oid("OID_02"), {stmt('OID_02 | Analytic | has_NSC | "A stone fruit."@en')})
    report = import_impact(apricot, [extra])
    conflict = report.conflicts[oid("OID_02")]
    assert conflict.base == {stmt(EX["EX4"])}
    assert conflict.incoming == extra.oid_statements
    assert report.verdict_for(oid("OID_02")) in (Verdict.MEANING_ALTERED, Verdict.INCOHERENCE_INTRODUCED)


def test_diff_synthetic_removal(apricot, apricot_text):
    new, _ = parse_collection(drop(apricot_text, "EX6"))
    r = diff_components((apricot, oid("OID_02")), (new, oid("OID_02")))
    assert r.kind is DiffKind.SYNTHETIC_OR_SUFFICIENT_ONLY
    assert r.ebms_delta.is_empty
    assert r.statement_delta.removed == {stmt(EX["EX6"])}


def test_diff_hri_edit(apricot_text):
    old, _ = parse_collection(apricot_text + 'OID_02 | HRI | "apricot"@en\n')
    new, _ = parse_collection(apricot_text + 'OID_02 | HRI | "Apricot"@en\n')
    r = diff_components((old, oid("OID_02")), (new, oid("OID_02")))
    assert r.kind is DiffKind.ANNOTATION_ONLY
    assert any(line.startswith("annotation added") for line in r.detail)


def test_diff_meaning_change(apricot, apricot_text, ex):
    new, _ = parse_collection(drop(apricot_text, "EX5"))
    r = diff_components((apricot, oid("OID_02")), (new, oid("OID_02")))
    assert r.kind is DiffKind.MEANING_AFFECTING
    assert r.kind in BREAKING_KINDS
    assert {ex["EX5"], ex["EX1*"], ex["EX2*"]} <= r.ebms_delta.removed


def test_diff_identical(apricot):
    reports = diff_collections(apricot, apricot)
    assert {r.kind for r in reports} == {DiffKind.IDENTICAL}
    assert [str(r.oid) for r in reports] == ["OID_01", "OID_02", "OID_03", "OID_99"]


def test_diff_added_and_removed_components(apricot):
    small = Collection({oid("OID_99"): apricot.components[oid("OID_99")]})
    r = diff_components((small, oid("OID_01")), (apricot, oid("OID_01")))
    assert r.detail[0].startswith("Added")
    assert r.kind is DiffKind.MEANING_AFFECTING
    back = diff_components((apricot, oid("OID_01")), (small, oid("OID_01")))
    assert back.detail[0].startswith("Removed")


def test_diff_deprecation_note(apricot_text):
    old, _ = parse_collection(apricot_text)
    new, _ = parse_collection(apricot_text + 'OID_03 | Meta | status | "deprecated"\n')
    r = diff_components((old, oid("OID_03")), (new, oid("OID_03")))
    assert r.kind is DiffKind.ANNOTATION_ONLY
    assert "OID_03 is deprecated in the new version" in r.detail


def test_diff_incoherent(apricot, apricot_text):
    new, _ = parse_collection(apricot_text + "OID_02 | Analytic | has_NC | OID_99\n")
    assert diff_components((apricot, oid("OID_02")), (new, oid("OID_02"))).kind is DiffKind.INCOHERENT


def test_diff_rejects_mismatched_oids(apricot):
    with pytest.raises(ValueError):
        diff_components((apricot, oid("OID_01")), (apricot, oid("OID_02")))


def test_diff_symmetry():
    rng = random.Random(21)
    for _ in range(40):
        a = load([str_of(random_statement(rng, 2)) for _ in range(rng.randint(1, 4))])
        b = load([str_of(random_statement(rng, 2)) for _ in range(rng.randint(1, 4))])
        for fwd, back in zip(diff_collections(a, b), diff_collections(b, a)):
            assert fwd.oid == back.oid
            assert fwd.kind == back.kind
            assert fwd.ebms_delta == back.ebms_delta.swapped()
            assert fwd.statement_delta == back.statement_delta.swapped()


def str_of(s):
    from ocmeaning.language import serialize_statement

    return serialize_statement(s)
