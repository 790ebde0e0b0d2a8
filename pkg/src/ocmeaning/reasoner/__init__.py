"""ALC reasoning with general TBoxes.

Satisfiability is decided by a tableau: each TBox axiom ``A ⊑ B`` becomes
the constraint ``¬A ⊔ B`` placed on every element, ``⊔`` branches, ``∃``
creates successors, ``∀`` propagates, and subset blocking on ancestor labels
guarantees termination. A query that runs out of budget raises
:class:`ResourceLimitExceeded`; it never comes back as an answer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..model import (
    And, ConceptExpr, DlAxiom, Not, Or, Sub, axiom_parts, class_oids, lexical_units, normalize, role_oids,
)
from . import kernel
from ._encode import ConceptTable
from .oracle import OracleInputError, oracle_entails, oracle_satisfiable

DEFAULT_NODE_BUDGET = 100_000


class ResourceLimitExceeded(RuntimeError):
    """The tableau hit its node budget before reaching a verdict."""

    def __init__(self, budget: int, what: str = ""):
        super().__init__(f"node budget of {budget} exhausted" + (f" while checking {what}" if what else ""))
        self.budget = budget
        self.what = what


@dataclass(frozen=True)
class Tbox:
    axioms: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "axioms", frozenset(self.axioms))

    @classmethod
    def of(cls, axioms: Iterable[DlAxiom]) -> Tbox:
        return cls(frozenset(axioms))

    @property
    def signature(self) -> frozenset:
        out: set = set()
        for a in self.axioms:
            for e in (a.lhs, a.rhs):
                out |= class_oids(e) | role_oids(e) | lexical_units(e)
        return frozenset(out)

    def with_axioms(self, extra: Iterable[DlAxiom]) -> Tbox:
        return Tbox(self.axioms | frozenset(extra))

    def internalized(self) -> list[ConceptExpr]:
        """One ``¬lhs ⊔ rhs`` constraint per subsumption, in a fixed order."""
        parts = [p for a in self.axioms for p in axiom_parts(a)]
        parts.sort(key=lambda s: s.sort_key)
        return [normalize(Or((Not(p.lhs), p.rhs))) for p in parts]


EMPTY = Tbox()


def is_satisfiable(c: ConceptExpr, t: Tbox = EMPTY, *, node_budget: int = DEFAULT_NODE_BUDGET,
                   backend: str | None = None) -> bool:
    """Whether some model of ``t`` gives ``c`` a non-empty extension."""
    table = ConceptTable()
    root = table.intern(normalize(c))
    universal = [table.intern(u) for u in t.internalized()]
    kind, arg, filler, children, comp, n_roles = table.tables()
    run = kernel.BACKENDS[backend] if backend else kernel.satisfiable
    verdict = run(kind, arg, filler, children, comp, n_roles, [root], universal, node_budget)
    if verdict < 0:
        raise ResourceLimitExceeded(node_budget, str(c))
    return verdict == 1


def entails(t: Tbox, a: DlAxiom, *, node_budget: int = DEFAULT_NODE_BUDGET, backend: str | None = None) -> bool:
    for part in axiom_parts(a):
        probe = And((part.lhs, Not(part.rhs)))
        if is_satisfiable(probe, t, node_budget=node_budget, backend=backend):
            return False
    return True


def is_tautology(a: DlAxiom, *, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff ``a`` follows from the empty TBox."""
    return entails(EMPTY, a, node_budget=node_budget)


__all__ = [
    "DEFAULT_NODE_BUDGET",
    "EMPTY",
    "OracleInputError",
    "ResourceLimitExceeded",
    "Tbox",
    "entails",
    "is_satisfiable",
    "is_tautology",
    "oracle_entails",
    "oracle_satisfiable",
]
