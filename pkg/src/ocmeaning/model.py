"""Value types shared across the package.

Everything here is immutable. Concept expressions are normalized on
construction wherever they enter a statement or an axiom, so plain ``==``
on statements and axioms is canonical equality.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

OID_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*)_([0-9]+)")


@dataclass(frozen=True, repr=False)
class Oid:
    """Ontological identifier, rendered ``PREFIX_DIGITS`` (e.g. ``OID_02``).

    ``iri_base`` is carried for export only and does not take part in
    equality or hashing.
    """

    prefix: str
    local: str
    iri_base: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", self.prefix) or not self.local.isdigit():
            raise ValueError(f"not an OID: {self.prefix!r}_{self.local!r}")

    @classmethod
    def parse(cls, text: str, iri_base: str | None = None) -> Oid:
        m = OID_RE.fullmatch(text)
        if m is None:
            raise ValueError(f"not an OID: {text!r}")
        return cls(m.group(1), m.group(2), iri_base)

    def __str__(self) -> str:
        return f"{self.prefix}_{self.local}"

    def __repr__(self) -> str:
        return f"Oid({str(self)!r})"

    @property
    def sort_key(self) -> tuple:
        return (self.prefix, int(self.local), self.local)

    def iri(self, default_base: str) -> str:
        base = self.iri_base or default_base
        return f"{base.rstrip('/')}/{self}"


@dataclass(frozen=True)
class LexicalUnit:
    """A natural-language string plus language tag, used as one atomic symbol."""

    text: str
    lang: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("lexical unit text must be non-empty")
        if not re.fullmatch(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*", self.lang):
            raise ValueError(f"bad language tag: {self.lang!r}")

    def __str__(self) -> str:
        return f'"{self.text}"@{self.lang}'


# --- concept expressions -------------------------------------------------


class ConceptExpr:
    """Base class of the concept expression tree."""

    __slots__ = ()

    def __str__(self) -> str:
        from .language import render_concept

        return render_concept(self)


@dataclass(frozen=True)
class Top(ConceptExpr):
    pass


@dataclass(frozen=True)
class Bottom(ConceptExpr):
    pass


@dataclass(frozen=True)
class Atom(ConceptExpr):
    oid: Oid


@dataclass(frozen=True)
class NlAtom(ConceptExpr):
    unit: LexicalUnit


@dataclass(frozen=True)
class Not(ConceptExpr):
    operand: ConceptExpr


def _operand_tuple(obj, operands) -> None:
    operands = tuple(operands)
    if not operands:
        raise ValueError(f"{type(obj).__name__} needs at least one operand")
    object.__setattr__(obj, "operands", operands)


@dataclass(frozen=True)
class And(ConceptExpr):
    operands: tuple[ConceptExpr, ...]

    def __post_init__(self) -> None:
        _operand_tuple(self, self.operands)


@dataclass(frozen=True)
class Or(ConceptExpr):
    operands: tuple[ConceptExpr, ...]

    def __post_init__(self) -> None:
        _operand_tuple(self, self.operands)


@dataclass(frozen=True)
class Exists(ConceptExpr):
    role: Oid
    filler: ConceptExpr


@dataclass(frozen=True)
class Forall(ConceptExpr):
    role: Oid
    filler: ConceptExpr


TOP = Top()
BOTTOM = Bottom()


@lru_cache(maxsize=65536)
def expr_key(e: ConceptExpr) -> tuple:
    """Total order on expressions.

    Top < Bottom < Atom < NlAtom < Not < Exists < Forall < And < Or, with
    ties broken recursively.
    """
    if isinstance(e, Top):
        return (0,)
    if isinstance(e, Bottom):
        return (1,)
    if isinstance(e, Atom):
        return (2, e.oid.sort_key)
    if isinstance(e, NlAtom):
        return (3, e.unit.lang, e.unit.text)
    if isinstance(e, Not):
        return (4, expr_key(e.operand))
    if isinstance(e, Exists):
        return (5, e.role.sort_key, expr_key(e.filler))
    if isinstance(e, Forall):
        return (6, e.role.sort_key, expr_key(e.filler))
    if isinstance(e, And):
        return (7, tuple(expr_key(o) for o in e.operands))
    if isinstance(e, Or):
        return (8, tuple(expr_key(o) for o in e.operands))
    raise TypeError(f"not a concept expression: {e!r}")


def _negate(e: ConceptExpr) -> ConceptExpr:
    # NNF of Not(e), where e is already in NNF
    if isinstance(e, Top):
        return BOTTOM
    if isinstance(e, Bottom):
        return TOP
    if isinstance(e, (Atom, NlAtom)):
        return Not(e)
    if isinstance(e, Not):
        return e.operand
    if isinstance(e, And):
        return _junction(Or, [_negate(o) for o in e.operands])
    if isinstance(e, Or):
        return _junction(And, [_negate(o) for o in e.operands])
    if isinstance(e, Exists):
        return Forall(e.role, _negate(e.filler))
    if isinstance(e, Forall):
        return Exists(e.role, _negate(e.filler))
    raise TypeError(f"not a concept expression: {e!r}")


def _junction(kind, operands: Iterable[ConceptExpr]) -> ConceptExpr:
    flat: dict[ConceptExpr, None] = {}
    for o in operands:
        if isinstance(o, kind):
            flat.update(dict.fromkeys(o.operands))
        else:
            flat[o] = None
    ordered = sorted(flat, key=expr_key)
    if len(ordered) == 1:
        return ordered[0]
    return kind(tuple(ordered))


@lru_cache(maxsize=65536)
def normalize(e: ConceptExpr) -> ConceptExpr:
    """Canonical negation-normal form.

    Double negations vanish, ``And``/``Or`` are flattened, deduplicated and
    sorted by :func:`expr_key`; a junction left with one operand collapses
    to it. Tautologies and contradictions are left alone.
    """
    if isinstance(e, (Top, Bottom, Atom, NlAtom)):
        return e
    if isinstance(e, Not):
        return _negate(normalize(e.operand))
    if isinstance(e, And):
        return _junction(And, [normalize(o) for o in e.operands])
    if isinstance(e, Or):
        return _junction(Or, [normalize(o) for o in e.operands])
    if isinstance(e, Exists):
        return Exists(e.role, normalize(e.filler))
    if isinstance(e, Forall):
        return Forall(e.role, normalize(e.filler))
    raise TypeError(f"not a concept expression: {e!r}")


def walk(e: ConceptExpr) -> Iterator[ConceptExpr]:
    yield e
    if isinstance(e, Not):
        yield from walk(e.operand)
    elif isinstance(e, (And, Or)):
        for o in e.operands:
            yield from walk(o)
    elif isinstance(e, (Exists, Forall)):
        yield from walk(e.filler)


def class_oids(e: ConceptExpr) -> set[Oid]:
    return {n.oid for n in walk(e) if isinstance(n, Atom)}


def role_oids(e: ConceptExpr) -> set[Oid]:
    return {n.role for n in walk(e) if isinstance(n, (Exists, Forall))}


def lexical_units(e: ConceptExpr) -> set[LexicalUnit]:
    return {n.unit for n in walk(e) if isinstance(n, NlAtom)}


def has_roles(e: ConceptExpr) -> bool:
    return any(isinstance(n, (Exists, Forall)) for n in walk(e))


# --- statements ------------------------------------------------------------


class Indicator(enum.Enum):
    ANALYTIC = "Analytic"
    SYNTHETIC = "Synthetic"


class Condition(enum.Enum):
    NC = "has_NC"
    SC = "has_SC"
    NSC = "has_NSC"


# output order: definitions first, then necessary, then sufficient conditions
_CONDITION_RANK = {Condition.NSC: 0, Condition.NC: 1, Condition.SC: 2}
_INDICATOR_RANK = {Indicator.ANALYTIC: 0, Indicator.SYNTHETIC: 1}


@dataclass(frozen=True)
class OidStatement:
    """``subject | indicator | condition | characterization``."""

    subject: Oid
    indicator: Indicator
    condition: Condition
    characterization: ConceptExpr

    def __post_init__(self) -> None:
        if not isinstance(self.subject, Oid):
            raise TypeError("the subject of an OID statement must be an Oid")
        object.__setattr__(self, "characterization", normalize(self.characterization))

    @property
    def sort_key(self) -> tuple:
        return (
            self.subject.sort_key,
            _INDICATOR_RANK[self.indicator],
            _CONDITION_RANK[self.condition],
            expr_key(self.characterization),
        )

    def __str__(self) -> str:
        from .language import serialize_statement

        return serialize_statement(self)


@dataclass(frozen=True)
class Hri:
    """Human-readable identifier. Carries no meaning."""

    subject: Oid
    label: str
    lang: str

    @property
    def sort_key(self) -> tuple:
        return (self.subject.sort_key, 0, self.lang, self.label)


@dataclass(frozen=True)
class Meta:
    subject: Oid
    key: str
    value: str

    @property
    def sort_key(self) -> tuple:
        return (self.subject.sort_key, 1, self.key, self.value)


OcStatement = Union[Hri, Meta]
Statement = Union[OidStatement, Hri, Meta]


def mentioned_oids(s: OidStatement) -> set[Oid]:
    """OIDs occurring in the characterization, as classes or as roles."""
    e = s.characterization
    return class_oids(e) | role_oids(e)


def sort_statements(stmts: Iterable) -> list:
    return sorted(stmts, key=lambda s: s.sort_key)


@dataclass(frozen=True)
class OntologicalComponent:
    oid: Oid
    oid_statements: frozenset[OidStatement] = frozenset()
    oc_statements: frozenset[Hri | Meta] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "oid_statements", frozenset(self.oid_statements))
        object.__setattr__(self, "oc_statements", frozenset(self.oc_statements))
        for s in (*self.oid_statements, *self.oc_statements):
            if s.subject != self.oid:
                raise ValueError(f"statement about {s.subject} placed in component {self.oid}")


@dataclass(frozen=True)
class Collection:
    """Components keyed by OID. Read-only once built."""

    components: Mapping[Oid, OntologicalComponent] = field(default_factory=dict)
    version_label: str = ""
    iri_base: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))

    def __contains__(self, oid: Oid) -> bool:
        return oid in self.components

    def __len__(self) -> int:
        return len(self.components)

    def get(self, oid: Oid) -> OntologicalComponent | None:
        return self.components.get(oid)

    def oid_statements(self) -> list[OidStatement]:
        return sort_statements(s for c in self.components.values() for s in c.oid_statements)

    def oc_statements(self) -> list[Hri | Meta]:
        return sort_statements(s for c in self.components.values() for s in c.oc_statements)

    def mentioned(self) -> set[Oid]:
        out: set[Oid] = set()
        for c in self.components.values():
            for s in c.oid_statements:
                out |= mentioned_oids(s)
        return out

    def list_primitives(self) -> list[Oid]:
        """OIDs referred to in characterizations that have no component."""
        return sorted(self.mentioned() - set(self.components), key=lambda o: o.sort_key)

    def knows(self, oid: Oid) -> bool:
        return oid in self.components or oid in self.mentioned()

    def merged_with(self, incoming: Iterable[OntologicalComponent]) -> Collection:
        comps = dict(self.components)
        for c in incoming:
            old = comps.get(c.oid)
            if old is not None:
                c = OntologicalComponent(
                    c.oid,
                    old.oid_statements | c.oid_statements,
                    old.oc_statements | c.oc_statements,
                )
            comps[c.oid] = c
        return Collection(comps, self.version_label, self.iri_base)


# --- DL axioms -------------------------------------------------------------


@dataclass(frozen=True)
class Sub:
    lhs: ConceptExpr
    rhs: ConceptExpr

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", normalize(self.lhs))
        object.__setattr__(self, "rhs", normalize(self.rhs))

    @property
    def sort_key(self) -> tuple:
        return (0, expr_key(self.lhs), expr_key(self.rhs))


@dataclass(frozen=True)
class Equiv:
    lhs: ConceptExpr
    rhs: ConceptExpr

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", normalize(self.lhs))
        object.__setattr__(self, "rhs", normalize(self.rhs))

    @property
    def sort_key(self) -> tuple:
        return (1, expr_key(self.lhs), expr_key(self.rhs))


DlAxiom = Union[Sub, Equiv]


def axiom_parts(a: DlAxiom) -> list[Sub]:
    """Split an axiom into subsumptions."""
    if isinstance(a, Equiv):
        return [Sub(a.lhs, a.rhs), Sub(a.rhs, a.lhs)]
    return [a]


def axiom_exprs(a: DlAxiom) -> tuple[ConceptExpr, ConceptExpr]:
    return a.lhs, a.rhs
