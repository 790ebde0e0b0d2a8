"""Pure-Python tableau kernel.

Node labels are Python ints used as bitsets over concept ids. Successors
are blocked when their initial label is a subset of the (complete) label
of an ancestor or of the parent. Labels proven unsatisfiable are cached
for the lifetime of one query, and so are labels proven satisfiable
provided no node below them was blocked by a node above them.
"""
from __future__ import annotations

TOP, BOTTOM, ATOM, NEG, AND, OR, EXISTS, FORALL = range(8)
SAT, UNSAT, LIMIT = 1, 0, -1
_NO_BLOCK = 1 << 30


class _Limit(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, kind, arg, filler, children, comp, n_roles, universal, budget):
        self.kind = kind
        self.arg = arg
        self.filler = filler
        self.children = children
        self.comp = comp
        self.budget = budget
        self.ticks = 0
        self.unsat: set[int] = set()
        self.sat: set[int] = set()
        self.low = _NO_BLOCK  # shallowest blocker depth seen in the current subtree
        self.ubits = 0
        for u in universal:
            self.ubits |= 1 << u
        self.exists_ids = [i for i, k in enumerate(kind) if k == EXISTS]
        self.forall_by_role: list[list[int]] = [[] for _ in range(n_roles)]
        for i, k in enumerate(kind):
            if k == FORALL:
                self.forall_by_role[arg[i]].append(i)

    def tick(self) -> None:
        self.ticks += 1
        if self.ticks > self.budget:
            raise _Limit

    def node(self, init: int, ancestors: list[int]) -> bool:
        self.tick()
        if init in self.unsat:
            return False
        if init in self.sat:
            return True
        depth = len(ancestors)
        outer, self.low = self.low, _NO_BLOCK
        ok = self.expand(0, list(_bits(init)), [], ancestors)
        used, self.low = self.low, min(outer, self.low)
        if not ok:
            self.unsat.add(init)
        elif used >= depth:
            self.sat.add(init)
        return ok

    def _hopeless(self, d: int, lab: int) -> bool:
        k = self.kind[d]
        if k == BOTTOM:
            return True
        if k == ATOM or k == NEG:
            c = self.comp[d]
            return c >= 0 and (lab >> c) & 1 == 1
        return False

    def expand(self, lab: int, todo: list[int], ors: list[int], ancestors: list[int]) -> bool:
        kind, children, comp = self.kind, self.children, self.comp
        while True:
            while todo:
                c = todo.pop()
                if (lab >> c) & 1:
                    continue
                k = kind[c]
                if k == BOTTOM:
                    return False
                if k == ATOM or k == NEG:
                    cc = comp[c]
                    if cc >= 0 and (lab >> cc) & 1:
                        return False
                lab |= 1 << c
                if k == AND:
                    todo.extend(children[c])
                elif k == OR:
                    ors.append(c)
            branch = None
            for o in ors:
                alts = children[o]
                if any((lab >> d) & 1 for d in alts):
                    continue
                open_ = [d for d in alts if not self._hopeless(d, lab)]
                if not open_:
                    return False
                if len(open_) == 1:
                    todo.append(open_[0])
                    break
                branch = open_
                break
            if todo:
                continue
            if branch is None:
                return self.successors(lab, ancestors)
            for d in branch:
                self.tick()
                if self.expand(lab, [d], list(ors), ancestors):
                    return True
            return False

    def successors(self, lab: int, ancestors: list[int]) -> bool:
        chain = None
        for e in self.exists_ids:
            if not (lab >> e) & 1:
                continue
            s = (1 << self.filler[e]) | self.ubits
            for f in self.forall_by_role[self.arg[e]]:
                if (lab >> f) & 1:
                    s |= 1 << self.filler[f]
            blocker = -1
            if s & ~lab == 0:
                blocker = len(ancestors)
            else:
                for j in range(len(ancestors) - 1, -1, -1):
                    if s & ~ancestors[j] == 0:
                        blocker = j
                        break
            if blocker >= 0:
                self.low = min(self.low, blocker)
                continue
            if chain is None:
                chain = ancestors + [lab]
            if not self.node(s, chain):
                return False
        return True


def satisfiable(kind, arg, filler, children, comp, n_roles, roots, universal, budget) -> int:
    """Decide whether ``roots`` can hold together at one element.

    Returns SAT (1), UNSAT (0) or LIMIT (-1) when the budget runs out.
    """
    search = _Search(kind, arg, filler, children, comp, n_roles, universal, budget)
    init = search.ubits
    for r in roots:
        init |= 1 << r
    try:
        return SAT if search.node(init, []) else UNSAT
    except _Limit:
        return LIMIT
