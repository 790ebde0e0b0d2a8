"""Ontological components: OID statements, analytic theories and
entailment-based meaning specifications (EBMS)."""

__version__ = "0.1.0"

from .analysis import DiffKind, DiffReport, ImpactReport, Verdict, diff_collections, diff_components, import_impact
from .bridge import NotReverseTranslatable, Side, reify_general_axiom, reverse_translate, translate, translate_theory
from .language import parse_collection, parse_concept, parse_statement, serialize_statement
from .meaning import AnalyticTheory, Ebms, analytic_theory, asserted_ebms, candidate_characterizations, ebms
from .model import (
    Collection,
    Condition,
    Hri,
    Indicator,
    LexicalUnit,
    Meta,
    Oid,
    OidStatement,
    OntologicalComponent,
    mentioned_oids,
    normalize,
)
from .reasoner import ResourceLimitExceeded, Tbox, entails, is_satisfiable, is_tautology, oracle_entails
