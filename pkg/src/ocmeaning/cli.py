"""``ocm`` command line.

Exit codes: 0 ok, 1 input error, 2 incoherence, 3 I/O failure,
4 meaning change.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analysis import BREAKING_KINDS, Verdict, diff_collections, import_impact
from .export import to_json_dict, to_owl_functional
from .language import parse_collection, primitive_diagnostic, serialize_axiom, serialize_statement
from .meaning import Ebms, EbmsComputationError, analytic_theory, asserted_ebms, ebms
from .model import Atom, Oid
from .reasoner import DEFAULT_NODE_BUDGET, ResourceLimitExceeded, is_satisfiable
from .reports import diff_text, diff_to_dict, ebms_to_dict, impact_text, impact_to_dict

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCOHERENT = 2
EXIT_IO = 3
EXIT_MEANING = 4


class _Abort(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as exc:
        raise _Abort(EXIT_IO, f"cannot read {path}: {exc}") from exc


def _load(path: str, out, strict: bool = False):
    """Parse a file, printing diagnostics; abort on errors."""
    collection, diags = parse_collection(_read(path), strict=strict)
    errors = [d for d in diags if d.is_error]
    for d in diags:
        print(d.format(path), file=out if not d.is_error else sys.stderr)
    if errors:
        raise _Abort(EXIT_INPUT, f"{path}: {len(errors)} error(s)")
    return collection


def _oid_arg(text: str) -> Oid:
    try:
        return Oid.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an OID: {text!r}") from None


def cmd_validate(args, out) -> int:
    collection, diags = parse_collection(_read(args.file), strict=args.strict)
    for d in diags:
        print(d.format(args.file), file=out)
    if any(d.is_error for d in diags):
        return EXIT_INPUT
    info = primitive_diagnostic(collection)
    if info is not None:
        print(info.format(args.file), file=out)
    if args.coherence:
        bad = []
        for oid in sorted(collection.components, key=lambda o: o.sort_key):
            tbox = analytic_theory(collection, oid, node_budget=args.node_budget).tbox()
            try:
                ok = is_satisfiable(Atom(oid), tbox, node_budget=args.node_budget)
            except ResourceLimitExceeded as exc:
                print(f"WARNING {args.file}:0:0 budget {oid}: {exc}", file=out)
                continue
            if not ok:
                bad.append(oid)
                print(f"ERROR {args.file}:0:0 incoherent {oid} is unsatisfiable in its analytic theory", file=out)
        if bad:
            return EXIT_INCOHERENT
    return EXIT_OK


def cmd_ebms(args, out) -> int:
    collection = _load(args.file, sys.stderr)
    oid = args.oid
    if not collection.knows(oid):
        raise _Abort(EXIT_INPUT, f"unknown OID {oid} in {args.file}")
    theory = analytic_theory(collection, oid, node_budget=args.node_budget)
    if args.asserted_only:
        result = Ebms(oid, asserted_ebms(collection, oid, node_budget=args.node_budget))
    else:
        try:
            result = ebms(collection, oid, report=args.report, node_budget=args.node_budget, theory=theory)
        except EbmsComputationError as exc:
            raise _Abort(EXIT_INPUT, str(exc)) from exc

    if args.json:
        doc = ebms_to_dict(result, theory if args.show_theory else None)
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        if args.show_theory:
            for s in theory.sorted():
                print(f"T: {serialize_statement(s)}", file=out)
            for p in sorted(theory.primitives, key=lambda o: o.sort_key):
                print(f"P: {p}", file=out)
        if not result.coherent:
            print("INCOHERENT", file=out)
        for s in result.sorted_asserted():
            print(f"A: {serialize_statement(s)}", file=out)
        for s in result.sorted_inferred():
            print(f"I: {serialize_statement(s)}", file=out)
        for a in result.sorted_nrt():
            print(f"N: {serialize_axiom(a)}", file=out)
    return EXIT_OK if result.coherent else EXIT_INCOHERENT


def cmd_diff(args, out) -> int:
    old = _load(args.old, sys.stderr)
    new = _load(args.new, sys.stderr)
    oids = [args.oid] if args.oid else None
    reports = diff_collections(old, new, oids, node_budget=args.node_budget)
    if args.json:
        print(json.dumps({"reports": [diff_to_dict(r) for r in reports]}, indent=2, ensure_ascii=False), file=out)
    else:
        print("\n\n".join(diff_text(r) for r in reports), file=out)
    return EXIT_MEANING if any(r.kind in BREAKING_KINDS for r in reports) else EXIT_OK


def cmd_import_check(args, out) -> int:
    base = _load(args.base, sys.stderr)
    incoming = _load(args.incoming, sys.stderr)
    report = import_impact(base, incoming.components.values(), node_budget=args.node_budget)
    if args.json:
        print(json.dumps(impact_to_dict(report), indent=2, ensure_ascii=False), file=out)
    else:
        print(impact_text(report), file=out)
    return {
        Verdict.NO_CHANGE: EXIT_OK,
        Verdict.EXTENDED: EXIT_OK,
        Verdict.MEANING_ALTERED: EXIT_MEANING,
        Verdict.INCOHERENCE_INTRODUCED: EXIT_INCOHERENT,
    }[report.verdict]


def cmd_export(args, out) -> int:
    collection = _load(args.file, sys.stderr)
    if args.format == "json":
        print(json.dumps(to_json_dict(collection), indent=2, ensure_ascii=False), file=out)
    else:
        out.write(to_owl_functional(collection, args.iri_base))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocm", description="Ontological components: meaning specifications from .ocs files")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, help="tableau node limit per query")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a collection and report diagnostics")
    p.add_argument("file")
    p.add_argument("--coherence", action="store_true", help="also check every component for satisfiability")
    p.add_argument("--strict", action="store_true", help="reject bottom and 'only' in characterizations")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ebms", help="entailment-based meaning specification of one OID")
    p.add_argument("file")
    p.add_argument("--oid", type=_oid_arg, required=True)
    p.add_argument("--asserted-only", action="store_true")
    p.add_argument("--show-theory", action="store_true", help="print the analytic theory first")
    p.add_argument("--report", action="store_true", help="also list entailments that have no OID side")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ebms)

    p = sub.add_parser("diff", help="compare two versions component by component")
    p.add_argument("old")
    p.add_argument("new")
    p.add_argument("--oid", type=_oid_arg)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("import-check", help="effect on meaning of importing one collection into another")
    p.add_argument("base")
    p.add_argument("incoming")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_import_check)

    p = sub.add_parser("export", help="render the collection as DL axioms")
    p.add_argument("file")
    p.add_argument("--format", choices=["owl-functional", "json"], default="owl-functional")
    p.add_argument("--iri-base", help="IRI prefix for OIDs (default: @base pragma or http://example.org/ocs)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Abort as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
