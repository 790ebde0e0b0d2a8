"""Moving between OID statements and DL axioms."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .model import (
    Atom,
    Collection,
    Condition,
    DlAxiom,
    Equiv,
    Indicator,
    Oid,
    OidStatement,
    OntologicalComponent,
    Sub,
    class_oids,
    role_oids,
)


def translate(s: OidStatement) -> DlAxiom:
    """Analytic and synthetic statements translate the same way."""
    subject = Atom(s.subject)
    if s.condition is Condition.NSC:
        return Equiv(subject, s.characterization)
    if s.condition is Condition.NC:
        return Sub(subject, s.characterization)
    return Sub(s.characterization, subject)


def translate_theory(stmts: Iterable[OidStatement]) -> frozenset[DlAxiom]:
    return frozenset(translate(s) for s in stmts)


@dataclass(frozen=True)
class NotReverseTranslatable:
    """An inferred axiom with no OID on either side (e.g. NL ⊑ NL)."""

    axiom: DlAxiom


def _oid_of(e) -> Oid | None:
    return e.oid if isinstance(e, Atom) else None


def reverse_translate(a: DlAxiom, direction_subject: Oid, *, indicator: Indicator):
    """Turn an axiom back into a statement about an OID.

    When both sides are OID atoms, the side equal to ``direction_subject``
    becomes the subject. The indicator is the caller's call: it depends on
    what the axiom was inferred from, not on its shape.
    """
    left, right = _oid_of(a.lhs), _oid_of(a.rhs)
    if left is None and right is None:
        return NotReverseTranslatable(a)
    if isinstance(a, Equiv):
        if left is not None and (right is None or left == direction_subject or right != direction_subject):
            return OidStatement(left, indicator, Condition.NSC, a.rhs)
        return OidStatement(right, indicator, Condition.NSC, a.lhs)
    if right is not None and (left is None or (right == direction_subject and left != direction_subject)):
        return OidStatement(right, indicator, Condition.SC, a.lhs)
    return OidStatement(left, indicator, Condition.NC, a.rhs)


class Side(enum.Enum):
    LHS = "lhs"
    RHS = "rhs"


class ReificationError(ValueError):
    pass


def reify_general_axiom(
    a: DlAxiom,
    fresh: Oid,
    side: Side,
    *,
    collection: Collection | None = None,
    indicator: Indicator = Indicator.ANALYTIC,
) -> tuple[OntologicalComponent, frozenset[OidStatement]]:
    """Give one side of a general class axiom its own component.

    The fresh OID is defined (NSC) as the chosen side; the original axiom
    then becomes an NC (fresh on the left) or SC (fresh on the right)
    statement against the other side.
    """
    if _oid_of(a.lhs) is not None or _oid_of(a.rhs) is not None:
        raise ReificationError("axiom has an OID side; use reverse_translate instead")
    used = class_oids(a.lhs) | class_oids(a.rhs) | role_oids(a.lhs) | role_oids(a.rhs)
    if collection is not None:
        used |= set(collection.components) | collection.mentioned()
    if fresh in used:
        raise ReificationError(f"{fresh} is already in use")

    chosen, other = (a.lhs, a.rhs) if side is Side.LHS else (a.rhs, a.lhs)
    definition = OidStatement(fresh, indicator, Condition.NSC, chosen)
    if isinstance(a, Equiv):
        condition = Condition.NSC
    else:
        condition = Condition.NC if side is Side.LHS else Condition.SC
    link = OidStatement(fresh, indicator, condition, other)
    stmts = frozenset({definition, link})
    return OntologicalComponent(fresh, stmts), stmts
