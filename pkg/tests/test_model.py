import pytest
from hypothesis import given, settings

from conftest import oid, stmt
from helpers import exprs
from ocmeaning.model import (
    And, Atom, Collection, Exists, Forall, LexicalUnit, NlAtom, Not, Oid, OidStatement, OntologicalComponent, Or,
    Sub, TOP, BOTTOM, Condition, Indicator, expr_key, mentioned_oids, normalize,
)
from ocmeaning.reasoner import oracle_entails
from ocmeaning.model import Equiv


def test_double_negation():
    assert normalize(Not(Not(Atom(oid("OID_01"))))) == Atom(oid("OID_01"))


def test_excluded_middle_is_left_alone():
    e = Or([Atom(oid("OID_99")), Not(Atom(oid("OID_99")))])
    assert normalize(e) == e


def test_de_morgan():
    a, b = Atom(oid("OID_10")), Atom(oid("OID_11"))
    src = Not(And([a, b]))
    out = normalize(src)
    assert out == Or([Not(a), Not(b)])
    assert oracle_entails([], Equiv(src, out))


def test_negated_restrictions_swap():
    r = oid("OID_10")
    assert normalize(Not(Exists(r, Atom(oid("OID_11"))))) == Forall(r, Not(Atom(oid("OID_11"))))
    assert normalize(Not(TOP)) == BOTTOM


def test_flatten_dedup_sort():
    a, b, c = (Atom(oid(f"P_{i}")) for i in (1, 2, 3))
    e = And([c, And([b, a]), a])
    assert normalize(e) == And([a, b, c])
    assert normalize(And([a, a])) == a


def test_total_order_between_kinds():
    u = NlAtom(LexicalUnit("x", "en"))
    a = Atom(oid("P_1"))
    ordered = [TOP, BOTTOM, a, u, Not(a), Exists(oid("R_1"), a), Forall(oid("R_1"), a), And([a, u]), Or([a, u])]
    assert sorted(reversed(ordered), key=expr_key) == ordered


def test_oid_numeric_order_and_rendering():
    assert str(oid("OID_02")) == "OID_02"
    assert oid("OID_9").sort_key < oid("OID_10").sort_key
    assert Oid.parse("IAO_0000115").prefix == "IAO"
    with pytest.raises(ValueError):
        Oid.parse("apricot")


def test_oid_is_never_a_lexical_unit():
    assert Atom(oid("OID_02")) != NlAtom(LexicalUnit("OID_02", "en"))


def test_lexical_unit_equality_includes_language():
    assert LexicalUnit("coin", "en") != LexicalUnit("coin", "fr")
    with pytest.raises(ValueError):
        LexicalUnit("", "en")


def test_junctions_need_operands():
    with pytest.raises(ValueError):
        And([])
    with pytest.raises(ValueError):
        Or([])


@given(exprs(5, roles=True))
def test_normalize_idempotent(e):
    n = normalize(e)
    assert normalize(n) == n


@settings(max_examples=200)
@given(exprs(4))
def test_normalize_preserves_meaning(e):
    assert oracle_entails([], Equiv(e, normalize(e)))


def test_statement_equality_is_canonical():
    a, b = Atom(oid("P_1")), Atom(oid("P_2"))
    s1 = OidStatement(oid("OID_01"), Indicator.ANALYTIC, Condition.NC, Or([b, a]))
    s2 = OidStatement(oid("OID_01"), Indicator.ANALYTIC, Condition.NC, Not(And([Not(a), Not(b)])))
    assert s1 == s2 and hash(s1) == hash(s2)


@pytest.mark.parametrize(
    "line, expected",
    [
        ("OID_02 | Analytic | has_NC | OID_01", {"OID_01"}),
        ('OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en', set()),
        ("OID_09 | Analytic | has_SC | some OID_10 . OID_11", {"OID_10", "OID_11"}),
        ("OID_09 | Analytic | has_NC | OID_09 and OID_01", {"OID_09", "OID_01"}),
    ],
)
def test_mentioned_oids(line, expected):
    assert {str(o) for o in mentioned_oids(stmt(line))} == expected


def test_component_rejects_foreign_statements():
    with pytest.raises(ValueError):
        OntologicalComponent(oid("OID_01"), {stmt("OID_02 | Analytic | has_NC | OID_01")})


def test_collection_is_read_only(apricot):
    with pytest.raises(TypeError):
        apricot.components[oid("OID_50")] = None
    assert [str(o) for o in apricot.list_primitives()] == ["OID_10"]


def test_axioms_normalize_sides():
    a = Atom(oid("P_1"))
    assert Sub(Not(Not(a)), a) == Sub(a, a)
