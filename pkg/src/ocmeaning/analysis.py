"""Import impact and component-level version diffs, both judged on EBMS."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .language import serialize_statement
from .meaning import Ebms, analytic_theory, ebms
from .model import (
    Collection,
    Condition,
    Hri,
    Meta,
    Oid,
    OidStatement,
    OntologicalComponent,
    sort_statements,
)
from .reasoner import DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class Delta:
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    @classmethod
    def between(cls, before: Iterable, after: Iterable) -> Delta:
        before, after = frozenset(before), frozenset(after)
        return cls(after - before, before - after)

    @property
    def is_empty(self) -> bool:
        return not self.added and not self.removed

    def swapped(self) -> Delta:
        return Delta(self.removed, self.added)


# --- import impact -----------------------------------------------------------


class Verdict(enum.Enum):
    NO_CHANGE = "NoChange"
    EXTENDED = "Extended"
    MEANING_ALTERED = "MeaningAltered"
    INCOHERENCE_INTRODUCED = "IncoherenceIntroduced"


_SEVERITY = list(Verdict)


@dataclass(frozen=True)
class Affected:
    before: Ebms
    after: Ebms
    delta: Delta
    verdict: Verdict


@dataclass(frozen=True)
class Conflict:
    """Base and incoming components define the same OID differently."""

    oid: Oid
    base: frozenset[OidStatement]
    incoming: frozenset[OidStatement]


@dataclass(frozen=True)
class ImpactReport:
    imported: frozenset[Oid] = frozenset()
    affected: Mapping[Oid, Affected] = field(default_factory=dict)
    coherence_breaks: frozenset[Oid] = frozenset()
    verdict: Verdict = Verdict.NO_CHANGE
    merged: Mapping[Oid, frozenset[OidStatement]] = field(default_factory=dict)
    conflicts: Mapping[Oid, Conflict] = field(default_factory=dict)

    def verdict_for(self, oid: Oid) -> Verdict:
        entry = self.affected.get(oid)
        return entry.verdict if entry is not None else Verdict.NO_CHANGE


def _judge(before: Ebms, after: Ebms, delta: Delta) -> Verdict:
    if before.coherent and not after.coherent:
        return Verdict.INCOHERENCE_INTRODUCED
    # a new or lost definition changes meaning even if nothing else is lost
    if delta.removed or any(s.condition is Condition.NSC for s in delta.added):
        return Verdict.MEANING_ALTERED
    if delta.added:
        return Verdict.EXTENDED
    return Verdict.NO_CHANGE


def _nsc(stmts: Iterable[OidStatement]) -> frozenset[OidStatement]:
    return frozenset(s for s in stmts if s.condition is Condition.NSC)


def import_impact(
    base: Collection,
    incoming: Iterable[OntologicalComponent],
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ImpactReport:
    """Effect on meaning of importing ``incoming`` into ``base``.

    New OIDs are compared against their own source closure; OIDs already in
    ``base`` (merges) and base OIDs whose analytic theory grows are compared
    against ``base``.
    """
    incoming = list(incoming)
    if not incoming:
        return ImpactReport()
    source = Collection({c.oid: c for c in incoming}, base.version_label)
    union = base.merged_with(incoming)

    merged: dict[Oid, frozenset[OidStatement]] = {}
    conflicts: dict[Oid, Conflict] = {}
    for comp in incoming:
        old = base.get(comp.oid)
        if old is None:
            continue
        new_stmts = comp.oid_statements - old.oid_statements
        if new_stmts:
            merged[comp.oid] = new_stmts
        base_nsc, new_nsc = _nsc(old.oid_statements), _nsc(new_stmts)
        if base_nsc and new_nsc:
            conflicts[comp.oid] = Conflict(comp.oid, base_nsc, new_nsc)

    def compare(oid: Oid, before_coll: Collection) -> Affected:
        before = ebms(before_coll, oid, node_budget=node_budget)
        after = ebms(union, oid, node_budget=node_budget)
        delta = Delta.between(before.members, after.members)
        return Affected(before, after, delta, _judge(before, after, delta))

    affected: dict[Oid, Affected] = {}
    for comp in incoming:
        affected[comp.oid] = compare(comp.oid, base if comp.oid in base else source)
    for oid in sorted(base.components, key=lambda o: o.sort_key):
        if oid in affected:
            continue
        before_t = analytic_theory(base, oid, node_budget=node_budget)
        after_t = analytic_theory(union, oid, node_budget=node_budget)
        if after_t.statements - before_t.statements:
            affected[oid] = compare(oid, base)

    breaks = frozenset(o for o, a in affected.items() if a.verdict is Verdict.INCOHERENCE_INTRODUCED)
    verdict = max((a.verdict for a in affected.values()), key=_SEVERITY.index, default=Verdict.NO_CHANGE)
    return ImpactReport(
        imported=frozenset(c.oid for c in incoming),
        affected=affected,
        coherence_breaks=breaks,
        verdict=verdict,
        merged=merged,
        conflicts=conflicts,
    )


# --- version diffs ------------------------------------------------------------


class DiffKind(enum.Enum):
    IDENTICAL = "Identical"
    ANNOTATION_ONLY = "AnnotationOnly"
    SYNTHETIC_OR_SUFFICIENT_ONLY = "SyntheticOrSufficientOnly"
    MEANING_AFFECTING = "MeaningAffecting"
    INCOHERENT = "Incoherent"


BREAKING_KINDS = frozenset({DiffKind.MEANING_AFFECTING, DiffKind.INCOHERENT})


@dataclass(frozen=True)
class DiffReport:
    oid: Oid
    kind: DiffKind
    ebms_delta: Delta = Delta()
    oc_delta: Delta = Delta()
    statement_delta: Delta = Delta()
    detail: tuple[str, ...] = ()


def _status(stmts: Iterable[Hri | Meta]) -> str | None:
    for s in stmts:
        if isinstance(s, Meta) and s.key == "status":
            return s.value
    return None


def diff_components(
    old: tuple[Collection, Oid],
    new: tuple[Collection, Oid],
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> DiffReport:
    (old_coll, old_oid), (new_coll, new_oid) = old, new
    if str(old_oid) != str(new_oid):
        raise ValueError(f"cannot diff {old_oid} against {new_oid}")
    oid = new_oid
    old_comp = old_coll.get(old_oid) or OntologicalComponent(old_oid)
    new_comp = new_coll.get(new_oid) or OntologicalComponent(new_oid)

    detail: list[str] = []
    if old_oid not in old_coll and new_oid in new_coll:
        detail.append(f"Added: {oid} is new in this version")
    elif old_oid in old_coll and new_oid not in new_coll:
        detail.append(f"Removed: {oid} no longer has a component")

    oc_delta = Delta.between(old_comp.oc_statements, new_comp.oc_statements)
    st_delta = Delta.between(old_comp.oid_statements, new_comp.oid_statements)
    before = ebms(old_coll, old_oid, node_budget=node_budget)
    after = ebms(new_coll, new_oid, node_budget=node_budget)
    eb_delta = Delta.between(before.members, after.members)

    for s in sort_statements(st_delta.removed):
        detail.append(f"statement removed: {serialize_statement(s)}")
    for s in sort_statements(st_delta.added):
        detail.append(f"statement added: {serialize_statement(s)}")
    for s in sort_statements(eb_delta.removed):
        detail.append(f"EBMS lost: {serialize_statement(s)}")
    for s in sort_statements(eb_delta.added):
        detail.append(f"EBMS gained: {serialize_statement(s)}")
    for s in sort_statements(oc_delta.removed):
        detail.append(f"annotation removed: {serialize_statement(s)}")
    for s in sort_statements(oc_delta.added):
        detail.append(f"annotation added: {serialize_statement(s)}")
    old_status, new_status = _status(old_comp.oc_statements), _status(new_comp.oc_statements)
    if old_status != new_status and new_status == "deprecated":
        detail.append(f"{oid} is deprecated in the new version")
    if not before.coherent:
        detail.append(f"{oid} is incoherent in the old version")
    if not after.coherent:
        detail.append(f"{oid} is incoherent in the new version")

    if not before.coherent or not after.coherent:
        kind = DiffKind.INCOHERENT
    elif not eb_delta.is_empty:
        kind = DiffKind.MEANING_AFFECTING
    elif not st_delta.is_empty:
        kind = DiffKind.SYNTHETIC_OR_SUFFICIENT_ONLY
    elif not oc_delta.is_empty:
        kind = DiffKind.ANNOTATION_ONLY
    else:
        kind = DiffKind.IDENTICAL
    return DiffReport(oid, kind, eb_delta, oc_delta, st_delta, tuple(detail))


def diff_collections(
    old: Collection,
    new: Collection,
    oids: Iterable[Oid] | None = None,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[DiffReport]:
    if oids is None:
        oids = set(old.components) | set(new.components)
    return [
        diff_components((old, oid), (new, oid), node_budget=node_budget)
        for oid in sorted(oids, key=lambda o: o.sort_key)
    ]
