"""Flatten NNF concept expressions into the integer tables the kernels use."""
from __future__ import annotations

from ..model import And, Atom, Bottom, ConceptExpr, Exists, Forall, NlAtom, Not, Or, Top

TOP, BOTTOM, ATOM, NEG, AND, OR, EXISTS, FORALL = range(8)


class ConceptTable:
    """Interns NNF concepts; ids are assigned children-first."""

    def __init__(self) -> None:
        self.ids: dict[ConceptExpr, int] = {}
        self.kind: list[int] = []
        self.arg: list[int] = []  # symbol for literals, role for restrictions
        self.filler: list[int] = []
        self.children: list[tuple[int, ...]] = []
        self.symbols: dict[object, int] = {}
        self.roles: dict[object, int] = {}

    def _add(self, e: ConceptExpr, kind: int, arg: int = -1, filler: int = -1, children: tuple = ()) -> int:
        i = len(self.kind)
        self.ids[e] = i
        self.kind.append(kind)
        self.arg.append(arg)
        self.filler.append(filler)
        self.children.append(children)
        return i

    def _symbol(self, e: ConceptExpr) -> int:
        key = e.oid if isinstance(e, Atom) else e.unit
        return self.symbols.setdefault(key, len(self.symbols))

    def intern(self, e: ConceptExpr) -> int:
        i = self.ids.get(e)
        if i is not None:
            return i
        if isinstance(e, Top):
            return self._add(e, TOP)
        if isinstance(e, Bottom):
            return self._add(e, BOTTOM)
        if isinstance(e, (Atom, NlAtom)):
            return self._add(e, ATOM, self._symbol(e))
        if isinstance(e, Not):
            if not isinstance(e.operand, (Atom, NlAtom)):
                raise ValueError("concept is not in negation-normal form")
            return self._add(e, NEG, self._symbol(e.operand))
        if isinstance(e, (And, Or)):
            kids = tuple(self.intern(o) for o in e.operands)
            return self._add(e, AND if isinstance(e, And) else OR, children=kids)
        if isinstance(e, (Exists, Forall)):
            f = self.intern(e.filler)
            r = self.roles.setdefault(e.role, len(self.roles))
            return self._add(e, EXISTS if isinstance(e, Exists) else FORALL, r, f)
        raise TypeError(f"not a concept expression: {e!r}")

    def complements(self) -> list[int]:
        pos: dict[int, int] = {}
        neg: dict[int, int] = {}
        for i, k in enumerate(self.kind):
            if k == ATOM:
                pos[self.arg[i]] = i
            elif k == NEG:
                neg[self.arg[i]] = i
        comp = []
        for i, k in enumerate(self.kind):
            if k == ATOM:
                comp.append(neg.get(self.arg[i], -1))
            elif k == NEG:
                comp.append(pos.get(self.arg[i], -1))
            else:
                comp.append(-1)
        return comp

    def tables(self) -> tuple:
        return (self.kind, self.arg, self.filler, self.children, self.complements(), len(self.roles))
