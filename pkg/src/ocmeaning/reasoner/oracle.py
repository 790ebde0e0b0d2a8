"""Truth-table entailment for role-free theories.

Used to check the tableau; it shares nothing with it beyond the model types.
Every class name becomes a propositional variable and all 2**n valuations
are evaluated at once as numpy boolean vectors.
"""
from __future__ import annotations

import numpy as np

from ..model import (
    And, Atom, Bottom, ConceptExpr, DlAxiom, Equiv, Exists, Forall, NlAtom, Not, Or, Sub, Top, walk,
)

MAX_VARIABLES = 20


class OracleInputError(ValueError):
    pass


def _names(e: ConceptExpr) -> set:
    out = set()
    for n in walk(e):
        if isinstance(n, (Exists, Forall)):
            raise OracleInputError("the truth-table oracle only accepts role-free expressions")
        if isinstance(n, Atom):
            out.add(("oid", n.oid))
        elif isinstance(n, NlAtom):
            out.add(("nl", n.unit))
    return out


def _eval(e: ConceptExpr, cols: dict, size: int) -> np.ndarray:
    if isinstance(e, Top):
        return np.ones(size, dtype=bool)
    if isinstance(e, Bottom):
        return np.zeros(size, dtype=bool)
    if isinstance(e, Atom):
        return cols[("oid", e.oid)]
    if isinstance(e, NlAtom):
        return cols[("nl", e.unit)]
    if isinstance(e, Not):
        return ~_eval(e.operand, cols, size)
    if isinstance(e, And):
        out = np.ones(size, dtype=bool)
        for o in e.operands:
            out &= _eval(o, cols, size)
        return out
    if isinstance(e, Or):
        out = np.zeros(size, dtype=bool)
        for o in e.operands:
            out |= _eval(o, cols, size)
        return out
    raise OracleInputError(f"unsupported expression {e!r}")


def _holds(a: DlAxiom, cols: dict, size: int) -> np.ndarray:
    lhs = _eval(a.lhs, cols, size)
    rhs = _eval(a.rhs, cols, size)
    if isinstance(a, Sub):
        return ~lhs | rhs
    if isinstance(a, Equiv):
        return lhs == rhs
    raise TypeError(f"not an axiom: {a!r}")


def _columns(axioms) -> tuple[dict, int]:
    names: set = set()
    for a in axioms:
        names |= _names(a.lhs) | _names(a.rhs)
    if len(names) > MAX_VARIABLES:
        raise OracleInputError(f"{len(names)} variables exceed the oracle limit of {MAX_VARIABLES}")
    ordered = sorted(names, key=repr)
    size = 1 << len(ordered)
    rows = np.arange(size, dtype=np.int64)
    cols = {name: ((rows >> i) & 1).astype(bool) for i, name in enumerate(ordered)}
    return cols, size


def oracle_entails(tbox, axiom: DlAxiom) -> bool:
    """True iff every valuation satisfying all of ``tbox`` satisfies ``axiom``.

    ``tbox`` may be a :class:`Tbox` or any iterable of axioms.
    """
    axioms = list(getattr(tbox, "axioms", tbox))
    cols, size = _columns(axioms + [axiom])
    models = np.ones(size, dtype=bool)
    for a in axioms:
        models &= _holds(a, cols, size)
    return bool(np.all(_holds(axiom, cols, size)[models]))


def oracle_satisfiable(tbox, concept: ConceptExpr) -> bool:
    """Propositional satisfiability of ``concept`` together with ``tbox``."""
    axioms = list(getattr(tbox, "axioms", tbox))
    probe = Sub(concept, Top())
    cols, size = _columns(axioms + [probe])
    models = np.ones(size, dtype=bool)
    for a in axioms:
        models &= _holds(a, cols, size)
    return bool(np.any(_eval(probe.lhs, cols, size) & models))
