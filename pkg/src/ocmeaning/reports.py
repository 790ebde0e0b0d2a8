"""Text and JSON renderings of EBMS, diff and import reports.

JSON documents follow the schemas shipped in ``ocmeaning/schemas``.
Statements are carried in their canonical one-line form, so reading a
document back is just a matter of re-parsing those lines.
"""
from __future__ import annotations

import json
from importlib import resources

from .analysis import Affected, Conflict, Delta, DiffKind, DiffReport, ImpactReport, Verdict
from .language import ParseDiagnostic, parse_concept, parse_statement, render_concept, serialize_statement
from .meaning import AnalyticTheory, Ebms
from .model import DlAxiom, Equiv, Oid, Sub, sort_statements


def load_schema(name: str) -> dict:
    text = resources.files("ocmeaning").joinpath("schemas", f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def _stmt_list(stmts) -> list[str]:
    return [serialize_statement(s) for s in sort_statements(stmts)]


def _parse_stmts(lines) -> frozenset:
    out = set()
    for line in lines:
        s = parse_statement(line)
        if isinstance(s, ParseDiagnostic):
            raise ValueError(f"bad statement in report: {line!r}: {s.message}")
        out.add(s)
    return frozenset(out)


def axiom_to_dict(a: DlAxiom) -> dict:
    return {"type": "Sub" if isinstance(a, Sub) else "Equiv", "lhs": render_concept(a.lhs), "rhs": render_concept(a.rhs)}


def axiom_from_dict(d: dict) -> DlAxiom:
    cls = Sub if d["type"] == "Sub" else Equiv
    return cls(parse_concept(d["lhs"]), parse_concept(d["rhs"]))


# --- EBMS ----------------------------------------------------------------------


def ebms_to_dict(e: Ebms, theory: AnalyticTheory | None = None) -> dict:
    d = {
        "subject": str(e.subject),
        "coherent": e.coherent,
        "asserted": _stmt_list(e.asserted),
        "inferred": _stmt_list(e.inferred),
        "non_reverse_translatable": [axiom_to_dict(a) for a in e.sorted_nrt()],
    }
    if theory is not None:
        d["theory"] = {
            "root": str(theory.root),
            "statements": _stmt_list(theory.statements),
            "primitives": [str(p) for p in sorted(theory.primitives, key=lambda o: o.sort_key)],
        }
    return d


def ebms_from_dict(d: dict) -> Ebms:
    return Ebms(
        subject=Oid.parse(d["subject"]),
        asserted=_parse_stmts(d["asserted"]),
        inferred=_parse_stmts(d["inferred"]),
        non_reverse_translatable=frozenset(axiom_from_dict(a) for a in d.get("non_reverse_translatable", [])),
        coherent=d["coherent"],
    )


def theory_from_dict(d: dict) -> AnalyticTheory:
    return AnalyticTheory(
        Oid.parse(d["root"]),
        _parse_stmts(d["statements"]),
        frozenset(Oid.parse(p) for p in d["primitives"]),
    )


# --- deltas and diffs -----------------------------------------------------------


def delta_to_dict(delta: Delta) -> dict:
    return {"added": _stmt_list(delta.added), "removed": _stmt_list(delta.removed)}


def delta_from_dict(d: dict) -> Delta:
    return Delta(_parse_stmts(d["added"]), _parse_stmts(d["removed"]))


def diff_to_dict(r: DiffReport) -> dict:
    return {
        "oid": str(r.oid),
        "kind": r.kind.value,
        "ebms_delta": delta_to_dict(r.ebms_delta),
        "oc_delta": delta_to_dict(r.oc_delta),
        "statement_delta": delta_to_dict(r.statement_delta),
        "detail": list(r.detail),
    }


def diff_from_dict(d: dict) -> DiffReport:
    return DiffReport(
        oid=Oid.parse(d["oid"]),
        kind=DiffKind(d["kind"]),
        ebms_delta=delta_from_dict(d["ebms_delta"]),
        oc_delta=delta_from_dict(d["oc_delta"]),
        statement_delta=delta_from_dict(d["statement_delta"]),
        detail=tuple(d["detail"]),
    )


def diff_text(r: DiffReport) -> str:
    lines = [f"oid: {r.oid}", f"kind: {r.kind.value}"]
    lines += [f"detail: {line}" for line in r.detail]
    return "\n".join(lines)


# --- import impact ----------------------------------------------------------------


def _oids(oids) -> list[str]:
    return [str(o) for o in sorted(oids, key=lambda o: o.sort_key)]


def impact_to_dict(r: ImpactReport) -> dict:
    return {
        "verdict": r.verdict.value,
        "imported": _oids(r.imported),
        "coherence_breaks": _oids(r.coherence_breaks),
        "affected": {
            str(oid): {
                "verdict": a.verdict.value,
                "before": ebms_to_dict(a.before),
                "after": ebms_to_dict(a.after),
                "delta": delta_to_dict(a.delta),
            }
            for oid, a in sorted(r.affected.items(), key=lambda kv: kv[0].sort_key)
        },
        "merged": {str(o): _stmt_list(s) for o, s in sorted(r.merged.items(), key=lambda kv: kv[0].sort_key)},
        "conflicts": {
            str(o): {"base": _stmt_list(c.base), "incoming": _stmt_list(c.incoming)}
            for o, c in sorted(r.conflicts.items(), key=lambda kv: kv[0].sort_key)
        },
    }


def impact_from_dict(d: dict) -> ImpactReport:
    affected = {
        Oid.parse(k): Affected(
            ebms_from_dict(v["before"]), ebms_from_dict(v["after"]), delta_from_dict(v["delta"]), Verdict(v["verdict"])
        )
        for k, v in d["affected"].items()
    }
    conflicts = {
        Oid.parse(k): Conflict(Oid.parse(k), _parse_stmts(v["base"]), _parse_stmts(v["incoming"]))
        for k, v in d["conflicts"].items()
    }
    return ImpactReport(
        imported=frozenset(Oid.parse(o) for o in d["imported"]),
        affected=affected,
        coherence_breaks=frozenset(Oid.parse(o) for o in d["coherence_breaks"]),
        verdict=Verdict(d["verdict"]),
        merged={Oid.parse(k): _parse_stmts(v) for k, v in d["merged"].items()},
        conflicts=conflicts,
    )


def impact_text(r: ImpactReport) -> str:
    lines = [f"verdict: {r.verdict.value}"]
    lines.append("imported: " + " ".join(_oids(r.imported)))
    if r.coherence_breaks:
        lines.append("coherence_breaks: " + " ".join(_oids(r.coherence_breaks)))
    for oid, a in sorted(r.affected.items(), key=lambda kv: kv[0].sort_key):
        lines.append("")
        lines.append(f"oid: {oid}")
        lines.append(f"verdict: {a.verdict.value}")
        for s in sort_statements(a.delta.added):
            lines.append(f"added: {serialize_statement(s)}")
        for s in sort_statements(a.delta.removed):
            lines.append(f"removed: {serialize_statement(s)}")
        for s in sort_statements(r.merged.get(oid, ())):
            lines.append(f"merged: {serialize_statement(s)}")
        conflict = r.conflicts.get(oid)
        if conflict is not None:
            for s in sort_statements(conflict.base):
                lines.append(f"CONFLICT base: {serialize_statement(s)}")
            for s in sort_statements(conflict.incoming):
                lines.append(f"CONFLICT incoming: {serialize_statement(s)}")
    return "\n".join(lines)
