"""Export a collection as OWL 2 functional-style syntax or JSON.

Lexical units become classes under ``<base>/nl/``, named by the
percent-encoded text followed by ``@lang``; since ``@`` is itself encoded
inside the text part, the mapping is reversible. Synthetic statements
keep their indicator as an axiom annotation.
"""
from __future__ import annotations

from urllib.parse import quote as pct

from .bridge import translate
from .language import render_concept, serialize_statement
from .model import (
    And,
    Atom,
    Bottom,
    Collection,
    ConceptExpr,
    DlAxiom,
    Equiv,
    Exists,
    Forall,
    Hri,
    Indicator,
    LexicalUnit,
    Meta,
    NlAtom,
    Not,
    Oid,
    Or,
    Top,
    class_oids,
    lexical_units,
    role_oids,
)
from .reports import axiom_to_dict

DEFAULT_IRI_BASE = "http://example.org/ocs"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"


def _lit(text: str, lang: str | None = None) -> str:
    body = '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return f"{body}@{lang}" if lang else body


class _Iris:
    def __init__(self, collection: Collection, base: str | None):
        self.base = (base or collection.iri_base or DEFAULT_IRI_BASE).rstrip("/")

    def oid(self, o: Oid) -> str:
        return f"<{o.iri(self.base)}>"

    def nl(self, u: LexicalUnit) -> str:
        return f"<{self.base}/nl/{pct(u.text, safe='')}@{pct(u.lang, safe='')}>"

    def vocab(self, name: str) -> str:
        return f"<{self.base}/vocab#{name}>"

    def expr(self, e: ConceptExpr) -> str:
        if isinstance(e, Top):
            return "owl:Thing"
        if isinstance(e, Bottom):
            return "owl:Nothing"
        if isinstance(e, Atom):
            return self.oid(e.oid)
        if isinstance(e, NlAtom):
            return self.nl(e.unit)
        if isinstance(e, Not):
            return f"ObjectComplementOf({self.expr(e.operand)})"
        if isinstance(e, And):
            return "ObjectIntersectionOf(" + " ".join(self.expr(o) for o in e.operands) + ")"
        if isinstance(e, Or):
            return "ObjectUnionOf(" + " ".join(self.expr(o) for o in e.operands) + ")"
        if isinstance(e, Exists):
            return f"ObjectSomeValuesFrom({self.oid(e.role)} {self.expr(e.filler)})"
        if isinstance(e, Forall):
            return f"ObjectAllValuesFrom({self.oid(e.role)} {self.expr(e.filler)})"
        raise TypeError(f"not a concept expression: {e!r}")

    def axiom(self, a: DlAxiom, annotation: str = "") -> str:
        name = "EquivalentClasses" if isinstance(a, Equiv) else "SubClassOf"
        return f"{name}({annotation}{self.expr(a.lhs)} {self.expr(a.rhs)})"


def to_owl_functional(collection: Collection, iri_base: str | None = None) -> str:
    iris = _Iris(collection, iri_base)
    stmts = collection.oid_statements()
    classes: set[Oid] = set(collection.components)
    roles: set[Oid] = set()
    units: set[LexicalUnit] = set()
    for s in stmts:
        classes |= class_oids(s.characterization)
        roles |= role_oids(s.characterization)
        units |= lexical_units(s.characterization)
    classes -= roles

    out = [
        "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)",
        f"Prefix(rdfs:=<{RDFS}>)",
        f"Ontology(<{iris.base}>" + (f" <{iris.base}/{collection.version_label}>" if collection.version_label else ""),
    ]
    body = []
    for o in sorted(classes, key=lambda o: o.sort_key):
        body.append(f"Declaration(Class({iris.oid(o)}))")
    for o in sorted(roles, key=lambda o: o.sort_key):
        body.append(f"Declaration(ObjectProperty({iris.oid(o)}))")
    ordered_units = sorted(units, key=lambda u: (u.lang, u.text))
    for u in ordered_units:
        body.append(f"Declaration(Class({iris.nl(u)}))")
    if units:
        body.append(f"Declaration(AnnotationProperty({iris.vocab('lexicalForm')}))")
    if any(s.indicator is Indicator.SYNTHETIC for s in stmts):
        body.append(f"Declaration(AnnotationProperty({iris.vocab('indicator')}))")
    meta_keys = sorted({s.key for s in collection.oc_statements() if isinstance(s, Meta)})
    for k in meta_keys:
        body.append(f"Declaration(AnnotationProperty({iris.vocab(pct(k, safe=''))}))")

    for u in ordered_units:
        body.append(f"AnnotationAssertion({iris.vocab('lexicalForm')} {iris.nl(u)} {_lit(u.text, u.lang)})")
    for s in collection.oc_statements():
        if isinstance(s, Hri):
            body.append(f"AnnotationAssertion(rdfs:label {iris.oid(s.subject)} {_lit(s.label, s.lang)})")
        else:
            body.append(f"AnnotationAssertion({iris.vocab(pct(s.key, safe=''))} {iris.oid(s.subject)} {_lit(s.value)})")
    for s in stmts:
        note = ""
        if s.indicator is Indicator.SYNTHETIC:
            note = f'Annotation({iris.vocab("indicator")} "Synthetic") '
        body.append(iris.axiom(translate(s), note))

    out += [f"    {line}" for line in body]
    out.append(")")
    return "\n".join(out) + "\n"


def to_json_dict(collection: Collection) -> dict:
    return {
        "format": "ocs-export/1",
        "version": collection.version_label,
        "statements": [
            {
                "statement": serialize_statement(s),
                "subject": str(s.subject),
                "indicator": s.indicator.value,
                "condition": s.condition.value,
                "characterization": render_concept(s.characterization),
                "axiom": axiom_to_dict(translate(s)),
            }
            for s in collection.oid_statements()
        ],
        "oc_statements": [serialize_statement(s) for s in collection.oc_statements()],
    }
