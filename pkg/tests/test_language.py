import pytest
from hypothesis import given, settings

from conftest import EX, oid, stmt
from helpers import exprs
from ocmeaning.language import (
    ConceptSyntaxError, ParseDiagnostic, Severity, parse_collection, parse_concept, parse_statement,
    primitive_diagnostic, render_concept, serialize_axiom, serialize_statement,
)
from ocmeaning.model import (
    TOP, And, Atom, Condition, Exists, Forall, Hri, Indicator, LexicalUnit, Meta, NlAtom, Not, OidStatement, Or,
    Sub, normalize,
)


def test_parse_nl_statement():
    s = parse_statement(EX["EX4"])
    assert s == OidStatement(
        oid("OID_02"), Indicator.ANALYTIC, Condition.NSC, NlAtom(LexicalUnit("A fruit of the tree Prunus armeniaca.", "en"))
    )


def test_parse_hri_and_meta():
    assert parse_statement('OID_02 | HRI | "apricot"@en') == Hri(oid("OID_02"), "apricot", "en")
    assert parse_statement('OID_02 | Meta | status | "deprecated"') == Meta(oid("OID_02"), "status", "deprecated")


def test_subject_must_be_an_oid():
    d = parse_statement('"A tropical fruit."@en | Analytic | has_NC | OID_01', 7)
    assert isinstance(d, ParseDiagnostic)
    assert d.is_error and d.message == "subject must be an OID"
    assert (d.line, d.column) == (7, 1)


@pytest.mark.parametrize(
    "line, code, column",
    [
        ("OID_02 | Analytic | has_NC", "field-count", 10),
        ("OID_02 | Maybe | has_NC | OID_01", "bad-indicator", 10),
        ("OID_02 | Analytic | has_XX | OID_01", "bad-condition", 21),
        ("OID_02 | Analytic | has_NC | OID_01 and", "syntax", 40),
        ("OID_02 | Analytic | has_NC | (OID_01", "syntax", 37),
        ('OID_02 | HRI | apricot', "lexical", 16),
        ('OID_02 | HRI | "a"@en or "b"@en', "bad-hri", 16),
    ],
)
def test_error_codes_and_columns(line, code, column):
    d = parse_statement(line)
    assert isinstance(d, ParseDiagnostic)
    assert d.code == code
    assert d.column == column


def test_missing_language_tag_is_an_error():
    d = parse_statement('OID_02 | Analytic | has_NC | "fruit"')
    assert isinstance(d, ParseDiagnostic) and d.is_error


def test_indicator_aliases():
    assert stmt("OID_09 | A | has_SC | some OID_10 . OID_11").indicator is Indicator.ANALYTIC
    assert stmt("OID_09 | S | has_SC | OID_11").indicator is Indicator.SYNTHETIC


@pytest.mark.parametrize(
    "text, expected",
    [
        ("OID_99 or not OID_99", Or([Atom(oid("OID_99")), Not(Atom(oid("OID_99")))])),
        ("some OID_10 . OID_11", Exists(oid("OID_10"), Atom(oid("OID_11")))),
        ("top", TOP),
        ("∃OID_10.OID_11", Exists(oid("OID_10"), Atom(oid("OID_11")))),
        ("¬(OID_10 ⊓ OID_11)", Or([Not(Atom(oid("OID_10"))), Not(Atom(oid("OID_11")))])),
        ("only OID_10 . not OID_11", Forall(oid("OID_10"), Not(Atom(oid("OID_11"))))),
    ],
)
def test_parse_concept(text, expected):
    assert parse_concept(text) == normalize(expected)


def test_and_binds_tighter_than_or():
    a, b, c = (Atom(oid(f"P_{i}")) for i in (1, 2, 3))
    assert parse_concept("P_1 or P_2 and P_3") == normalize(Or([a, And([b, c])]))


def test_concept_error_column():
    with pytest.raises(ConceptSyntaxError) as info:
        parse_concept("P_1 and and P_2")
    assert info.value.column == 9


def test_string_escapes():
    u = parse_concept(r'"say \"hi\" \\ bye"@en')
    assert u == NlAtom(LexicalUnit('say "hi" \\ bye', "en"))
    assert parse_concept(render_concept(u)) == u


def test_serialize_examples():
    assert serialize_statement(stmt(EX["EX5"])) == "OID_02 | Analytic | has_NC | OID_01"
    assert serialize_statement(Hri(oid("OID_02"), "apricot", "en")) == 'OID_02 | HRI | "apricot"@en'
    a, b, c = (Atom(oid(f"P_{i}")) for i in (1, 2, 3))
    s = OidStatement(oid("OID_01"), Indicator.ANALYTIC, Condition.NC, Or([a, And([b, c])]))
    text = serialize_statement(s)
    assert "(P_2 and P_3)" in text
    assert parse_statement(text) == s


def test_serialize_axiom():
    assert serialize_axiom(Sub(Atom(oid("OID_02")), Atom(oid("OID_01")))) == "OID_02 subclass-of OID_01"


@settings(max_examples=300)
@given(exprs(5, roles=True))
def test_concept_round_trip(e):
    assert parse_concept(render_concept(e)) == normalize(e)


@given(exprs(4, roles=True))
def test_statement_round_trip(e):
    for cond in Condition:
        s = OidStatement(oid("OID_07"), Indicator.SYNTHETIC, cond, e)
        assert parse_statement(serialize_statement(s)) == s


def test_collection_from_fixture(apricot):
    assert {str(o) for o in apricot.components} == {"OID_01", "OID_02", "OID_03", "OID_99"}
    assert [str(o) for o in apricot.list_primitives()] == ["OID_10"]
    assert apricot.version_label == "1"
    assert len(apricot.oid_statements()) == 10


def test_empty_collection():
    c, diags = parse_collection("")
    assert not c.components and diags == []


def test_duplicate_line_warns_once():
    c, diags = parse_collection(EX["EX5"] + "\n" + "OID_02 | Analytic | has_NC | not not OID_01\n")
    assert len(c.oid_statements()) == 1
    assert [(d.severity, d.code, d.line) for d in diags] == [(Severity.WARNING, "duplicate", 2)]


def test_hri_collision_warns():
    text = 'OID_01 | HRI | "fruit"@en\nOID_02 | HRI | "fruit"@en\nOID_03 | HRI | "fruit"@fr\n'
    _, diags = parse_collection(text)
    assert [(d.code, d.line) for d in diags] == [("hri-collision", 2)]


def test_crlf_comments_and_pragmas():
    text = "# header\r\n@version 2.1\r\n@base <http://x.org/o>\r\nOID_02 | Analytic | has_NC | OID_01  # trailing\r\n"
    c, diags = parse_collection(text)
    assert diags == []
    assert c.version_label == "2.1" and c.iri_base == "http://x.org/o"
    assert list(c.oid_statements()) == [stmt(EX["EX5"])]


def test_hash_inside_string_is_not_a_comment():
    c, diags = parse_collection('OID_01 | HRI | "no. #1"@en\n')
    assert diags == []
    assert next(iter(c.oc_statements())).label == "no. #1"


def test_bad_lines_are_skipped_and_reported():
    text = "@colour red\n" + EX["EX5"] + "\nOID_02 | Analytic\n"
    c, diags = parse_collection(text)
    assert [(d.code, d.line) for d in diags] == [("bad-pragma", 1), ("field-count", 3)]
    assert len(c.oid_statements()) == 1


def test_strict_profile():
    line = "OID_01 | Analytic | has_NC | only OID_10 . OID_11"
    assert isinstance(parse_statement(line), OidStatement)
    d = parse_statement(line, strict=True)
    assert isinstance(d, ParseDiagnostic) and d.code == "strict-profile"


def test_primitive_diagnostic(apricot):
    d = primitive_diagnostic(apricot)
    assert d.severity is Severity.INFO
    assert d.format("ex.ocs") == "INFO ex.ocs:0:0 primitives primitive references: OID_10"
