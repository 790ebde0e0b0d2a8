"""Strategies and small independent checkers shared by the tests."""
from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from ocmeaning.model import (
    BOTTOM, TOP, And, Atom, Bottom, Condition, Exists, Forall, Indicator, LexicalUnit, NlAtom, Not, Oid,
    OidStatement, Or, Sub, Top, normalize,
)

OIDS = [Oid("P", str(i)) for i in range(1, 5)]
UNITS = [LexicalUnit("red fruit", "en"), LexicalUnit("fruit rouge", "fr")]
ATOMS = [Atom(o) for o in OIDS] + [NlAtom(u) for u in UNITS]  # 6 symbols
ROLES = [Oid("R", "1"), Oid("R", "2")]


def exprs(max_depth: int = 4, roles: bool = False, atoms=ATOMS):
    leaves = st.sampled_from(atoms) | st.sampled_from([TOP, BOTTOM])

    def extend(children):
        parts = [
            children.map(Not),
            st.lists(children, min_size=2, max_size=3).map(And),
            st.lists(children, min_size=2, max_size=3).map(Or),
        ]
        if roles:
            parts.append(st.builds(Exists, st.sampled_from(ROLES), children))
            parts.append(st.builds(Forall, st.sampled_from(ROLES), children))
        return st.one_of(parts)

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth).filter(lambda e: depth(e) <= max_depth)


def depth(e) -> int:
    if isinstance(e, (Top, Bottom, Atom, NlAtom)):
        return 0
    if isinstance(e, Not):
        return 1 + depth(e.operand)
    if isinstance(e, (And, Or)):
        return 1 + max(depth(o) for o in e.operands)
    return 1 + depth(e.filler)


def random_expr(rng: random.Random, max_depth: int, atoms=ATOMS, roles=()) -> object:
    """Plain-random generator for fixed-count sweeps."""
    if max_depth == 0 or rng.random() < 0.3:
        r = rng.random()
        if r < 0.05:
            return TOP
        if r < 0.1:
            return BOTTOM
        return rng.choice(atoms)
    r = rng.random()
    sub = lambda: random_expr(rng, max_depth - 1, atoms, roles)
    if r < 0.25:
        return Not(sub())
    if r < 0.55 or (r >= 0.85 and not roles):
        return And([sub() for _ in range(rng.randint(2, 3))])
    if r < 0.85:
        return Or([sub() for _ in range(rng.randint(2, 3))])
    kind = Exists if rng.random() < 0.5 else Forall
    return kind(rng.choice(roles), sub())


def random_statement(rng: random.Random, max_depth: int = 4) -> OidStatement:
    subject = rng.choice(OIDS)
    while True:
        char = random_expr(rng, max_depth)
        # x has_NC x and x has_SC x are the same tautology; no unique reverse reading
        if normalize(char) != Atom(subject):
            break
    return OidStatement(subject, rng.choice(list(Indicator)), rng.choice(list(Condition)), char)


def random_tbox_axioms(rng: random.Random, n: int, max_depth: int = 3, atoms=ATOMS, roles=()):
    return [Sub(random_expr(rng, max_depth, atoms, roles), random_expr(rng, max_depth, atoms, roles)) for _ in range(n)]


# --- brute-force finite interpretations (independent of the tableau) -------


def _ext(e, dom, atoms, rel):
    if isinstance(e, Top):
        return frozenset(dom)
    if isinstance(e, Bottom):
        return frozenset()
    if isinstance(e, (Atom, NlAtom)):
        return atoms[e]
    if isinstance(e, Not):
        return frozenset(dom) - _ext(e.operand, dom, atoms, rel)
    if isinstance(e, And):
        out = frozenset(dom)
        for o in e.operands:
            out &= _ext(o, dom, atoms, rel)
        return out
    if isinstance(e, Or):
        out = frozenset()
        for o in e.operands:
            out |= _ext(o, dom, atoms, rel)
        return out
    f = _ext(e.filler, dom, atoms, rel)
    edges = rel[e.role]
    if isinstance(e, Exists):
        return frozenset(d for d in dom if any((d, t) in edges for t in f))
    return frozenset(d for d in dom if all(t in f for t in dom if (d, t) in edges))


def small_countermodel(axioms, goal, atoms, roles, size: int = 2) -> bool:
    """True if some interpretation of ``size`` elements satisfies ``axioms`` but not ``goal``."""
    dom = range(size)
    subsets = [frozenset(c) for r in range(size + 1) for c in itertools.combinations(dom, r)]
    pairs = [(a, b) for a in dom for b in dom]
    relations = [frozenset(c) for r in range(len(pairs) + 1) for c in itertools.combinations(pairs, r)]

    def holds(ax, ia, rel):
        return _ext(ax.lhs, dom, ia, rel) <= _ext(ax.rhs, dom, ia, rel)

    for ext in itertools.product(subsets, repeat=len(atoms)):
        ia = dict(zip(atoms, ext))
        for rels in itertools.product(relations, repeat=len(roles)):
            rel = dict(zip(roles, rels))
            if all(holds(a, ia, rel) for a in axioms) and not holds(goal, ia, rel):
                return True
    return False
