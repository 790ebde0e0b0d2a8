"""From asserted statements to an entailment-based meaning specification (EBMS).

Pipeline for one OID ``x``:

1. asserted EBMS: ``x``'s analytic, non-tautological NC/NSC statements;
2. analytic theory: the asserted EBMS of every OID reachable through
   characterizations, to a fixed point;
3. closure: every candidate characterization ``e`` (theory atoms, their
   negations, asserted characterizations) for which the translated theory
   entails ``x ⊑ e`` or ``x ≡ e``;
4. EBMS: asserted plus inferred, tautologies removed, NC dropped where the
   same characterization is already NSC.

The full deductive closure is infinite; the candidate set is what makes
step 3 finite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bridge import NotReverseTranslatable, reverse_translate, translate, translate_theory
from .model import (
    Atom,
    Collection,
    ConceptExpr,
    Condition,
    DlAxiom,
    Equiv,
    Indicator,
    NlAtom,
    Not,
    Oid,
    OidStatement,
    Sub,
    class_oids,
    expr_key,
    lexical_units,
    mentioned_oids,
    normalize,
    sort_statements,
)
from .reasoner import DEFAULT_NODE_BUDGET, ResourceLimitExceeded, Tbox, entails, is_satisfiable, is_tautology


class EbmsComputationError(RuntimeError):
    """The reasoner ran out of budget on a specific candidate."""

    def __init__(self, subject: Oid, candidate: ConceptExpr | None, cause: ResourceLimitExceeded):
        where = f"candidate {candidate}" if candidate is not None else "the coherence check"
        super().__init__(f"EBMS of {subject}: reasoner budget exhausted on {where}")
        self.subject = subject
        self.candidate = candidate
        self.__cause__ = cause


@dataclass(frozen=True)
class AnalyticTheory:
    root: Oid
    statements: frozenset[OidStatement] = frozenset()
    primitives: frozenset[Oid] = frozenset()

    def sorted(self) -> list[OidStatement]:
        return sort_statements(self.statements)

    def tbox(self) -> Tbox:
        return Tbox(translate_theory(self.statements))


@dataclass(frozen=True)
class Ebms:
    subject: Oid
    asserted: frozenset[OidStatement] = frozenset()
    inferred: frozenset[OidStatement] = frozenset()
    non_reverse_translatable: frozenset[DlAxiom] = frozenset()
    coherent: bool = True

    @property
    def members(self) -> frozenset[OidStatement]:
        return self.asserted | self.inferred

    def sorted_asserted(self) -> list[OidStatement]:
        return sort_statements(self.asserted)

    def sorted_inferred(self) -> list[OidStatement]:
        return sort_statements(self.inferred)

    def sorted_nrt(self) -> list[DlAxiom]:
        return sorted(self.non_reverse_translatable, key=lambda a: a.sort_key)


def is_analytic_entailment(s: OidStatement, *, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return (
        s.indicator is Indicator.ANALYTIC
        and s.condition in (Condition.NC, Condition.NSC)
        and not is_tautology(translate(s), node_budget=node_budget)
    )


def asserted_ebms(c: Collection, x: Oid, *, node_budget: int = DEFAULT_NODE_BUDGET) -> frozenset[OidStatement]:
    comp = c.get(x)
    if comp is None:
        return frozenset()
    return frozenset(s for s in comp.oid_statements if is_analytic_entailment(s, node_budget=node_budget))


def analytic_theory(c: Collection, x: Oid, *, node_budget: int = DEFAULT_NODE_BUDGET) -> AnalyticTheory:
    statements: set[OidStatement] = set()
    primitives: set[Oid] = set()
    visited = {x}
    frontier = [x]
    while frontier:
        oid = frontier.pop()
        own = asserted_ebms(c, oid, node_budget=node_budget)
        if not own and oid != x:
            primitives.add(oid)
        statements |= own
        for s in own:
            for m in mentioned_oids(s):
                if m not in visited:
                    visited.add(m)
                    frontier.append(m)
    return AnalyticTheory(x, frozenset(statements), frozenset(primitives))


def candidate_characterizations(t: AnalyticTheory) -> list[ConceptExpr]:
    """Atoms, negated atoms and asserted characterizations of the theory, in canonical order."""
    atoms: set[ConceptExpr] = set()
    full: set[ConceptExpr] = set()
    for s in t.statements:
        atoms.add(Atom(s.subject))
        atoms |= {Atom(o) for o in class_oids(s.characterization)}
        atoms |= {NlAtom(u) for u in lexical_units(s.characterization)}
        full.add(s.characterization)
    out = atoms | {normalize(Not(a)) for a in atoms} | full
    return sorted(out, key=expr_key)


def _drop_nc_shadowed(stmts: Iterable[OidStatement], nsc: set[ConceptExpr]) -> set[OidStatement]:
    return {s for s in stmts if not (s.condition is Condition.NC and s.characterization in nsc)}


def ebms(
    c: Collection,
    x: Oid,
    *,
    report: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
    theory: AnalyticTheory | None = None,
) -> Ebms:
    """Entailment-based meaning specification of ``x`` in ``c``.

    With ``report`` set, entailments between candidates that have no OID
    side (which therefore cannot become statements) are collected too.
    """
    t = theory if theory is not None else analytic_theory(c, x, node_budget=node_budget)
    asserted = asserted_ebms(c, x, node_budget=node_budget)
    tbox = t.tbox()
    subject = Atom(x)

    try:
        coherent = is_satisfiable(subject, tbox, node_budget=node_budget)
    except ResourceLimitExceeded as exc:
        raise EbmsComputationError(x, None, exc) from exc
    if not coherent:
        return Ebms(x, asserted, frozenset(), frozenset(), False)

    candidates = candidate_characterizations(t)
    found: set[OidStatement] = set()
    for e in candidates:
        try:
            if not entails(tbox, Sub(subject, e), node_budget=node_budget):
                continue
            if entails(tbox, Sub(e, subject), node_budget=node_budget):
                axiom = Equiv(subject, e)
            else:
                axiom = Sub(subject, e)
            if is_tautology(axiom, node_budget=node_budget):
                continue
        except ResourceLimitExceeded as exc:
            raise EbmsComputationError(x, e, exc) from exc
        # premises are analytic entailments only, so the inference is analytic too
        found.add(reverse_translate(axiom, x, indicator=Indicator.ANALYTIC))

    nsc = {s.characterization for s in found | asserted if s.condition is Condition.NSC}
    inferred = _drop_nc_shadowed(found - asserted, nsc)

    nrt: set[DlAxiom] = set()
    if report:
        nrt = _non_reverse_translatable(x, tbox, candidates, node_budget)
    return Ebms(x, asserted, frozenset(inferred), frozenset(nrt), True)


def _non_reverse_translatable(x: Oid, tbox: Tbox, candidates: list[ConceptExpr], node_budget: int) -> set[DlAxiom]:
    anonymous = [e for e in candidates if not isinstance(e, Atom)]
    out: set[DlAxiom] = set()
    for lhs in anonymous:
        if isinstance(lhs, Not):
            # contrapositives of entailments already reported another way
            continue
        for rhs in anonymous:
            if lhs == rhs:
                continue
            a = Sub(lhs, rhs)
            if entails(tbox, a, node_budget=node_budget) and not is_tautology(a, node_budget=node_budget):
                back = reverse_translate(a, x, indicator=Indicator.ANALYTIC)
                if isinstance(back, NotReverseTranslatable):
                    out.add(back.axiom)
    return out
