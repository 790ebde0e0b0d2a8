"""Reading and writing the ``.ocs`` statement language.

One statement per line::

    OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en
    OID_02 | HRI | "apricot"@en
    OID_02 | Meta | status | deprecated

Characterizations use the concept grammar below (ASCII keywords, Unicode
aliases accepted)::

    expr  := and ( ("or" | "⊔") and )*
    and   := unary ( ("and" | "⊓") unary )*
    unary := ("not" | "¬") unary | quant | atom | "(" expr ")"
    quant := ("some" | "∃") OID "." unary | ("only" | "∀") OID "." unary
    atom  := OID | STRING "@" LANGTAG | "top" | "⊤" | "bottom" | "⊥"
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .model import (
    OID_RE,
    And,
    Atom,
    Bottom,
    Collection,
    Condition,
    ConceptExpr,
    DlAxiom,
    Equiv,
    Exists,
    Forall,
    Hri,
    Indicator,
    LexicalUnit,
    Meta,
    NlAtom,
    Not,
    Oid,
    OidStatement,
    OntologicalComponent,
    Or,
    Sub,
    Top,
    BOTTOM,
    TOP,
    mentioned_oids,
    normalize,
)


class Severity(enum.Enum):
    ERROR = "ERROR"
    WARNING = "WARNING"
    INFO = "INFO"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    severity: Severity
    message: str
    code: str

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def format(self, filename: str = "<input>") -> str:
        return f"{self.severity.value} {filename}:{self.line}:{self.column} {self.code} {self.message}"


class ConceptSyntaxError(ValueError):
    """Raised by :func:`parse_concept`. ``column`` is 1-based."""

    def __init__(self, message: str, column: int, code: str = "syntax"):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column
        self.code = code


# --- lexer ---------------------------------------------------------------

_KEYWORDS = {
    "or": "OR", "⊔": "OR",
    "and": "AND", "⊓": "AND",
    "not": "NOT", "¬": "NOT",
    "some": "SOME", "∃": "SOME",
    "only": "ONLY", "∀": "ONLY",
    "top": "TOP", "⊤": "TOP",
    "bottom": "BOTTOM", "⊥": "BOTTOM",
}
_SYMBOLS = {"(": "LPAREN", ")": "RPAREN", ".": "DOT"}
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LANG_RE = re.compile(r"[A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*")


@dataclass
class _Token:
    kind: str
    value: object
    col: int  # 0-based offset into the concept text


def _read_string(text: str, i: int, offset: int) -> tuple[str, int]:
    """Read a double-quoted string starting at ``text[i] == '"'``."""
    out = []
    j = i + 1
    while j < len(text):
        ch = text[j]
        if ch == "\\":
            if j + 1 < len(text) and text[j + 1] in '"\\':
                out.append(text[j + 1])
                j += 2
                continue
            raise ConceptSyntaxError("bad escape in string", offset + j + 1, "lexical")
        if ch == '"':
            return "".join(out), j + 1
        out.append(ch)
        j += 1
    raise ConceptSyntaxError("unterminated string", offset + i + 1, "lexical")


def _tokenize(text: str, offset: int) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(_Token(_SYMBOLS[ch], ch, i))
            i += 1
        elif ch in _KEYWORDS:
            tokens.append(_Token(_KEYWORDS[ch], ch, i))
            i += 1
        elif ch == '"':
            s, j = _read_string(text, i, offset)
            if j >= n or text[j] != "@":
                raise ConceptSyntaxError("lexical unit needs a language tag", offset + i + 1, "lexical")
            m = _LANG_RE.match(text, j + 1)
            if m is None:
                raise ConceptSyntaxError("bad language tag", offset + j + 1, "lexical")
            if not s:
                raise ConceptSyntaxError("empty lexical unit", offset + i + 1, "lexical")
            tokens.append(_Token("STRING", LexicalUnit(s, m.group(0)), i))
            i = m.end()
        else:
            m = _WORD_RE.match(text, i)
            if m is None:
                raise ConceptSyntaxError(f"unexpected character {ch!r}", offset + i + 1, "lexical")
            word = m.group(0)
            if word in _KEYWORDS:
                tokens.append(_Token(_KEYWORDS[word], word, i))
            elif OID_RE.fullmatch(word):
                tokens.append(_Token("OID", Oid.parse(word), i))
            else:
                raise ConceptSyntaxError(f"unknown identifier {word!r}", offset + i + 1, "lexical")
            i = m.end()
    tokens.append(_Token("EOF", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, offset: int):
        self.tokens = _tokenize(text, offset)
        self.pos = 0
        self.offset = offset

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what}", tok)
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token):
        if tok.kind == "EOF":
            message += ", found end of input"
        raise ConceptSyntaxError(message, self.offset + tok.col + 1)

    def parse(self) -> ConceptExpr:
        if self.peek().kind == "EOF":
            self.fail("empty characterization", self.peek())
        e = self.expr()
        if self.peek().kind != "EOF":
            self.fail(f"unexpected {self.peek().value!r}", self.peek())
        return e

    def expr(self) -> ConceptExpr:
        parts = [self.conj()]
        while self.peek().kind == "OR":
            self.pos += 1
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(parts)

    def conj(self) -> ConceptExpr:
        parts = [self.unary()]
        while self.peek().kind == "AND":
            self.pos += 1
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(parts)

    def unary(self) -> ConceptExpr:
        tok = self.peek()
        if tok.kind == "NOT":
            self.pos += 1
            return Not(self.unary())
        if tok.kind in ("SOME", "ONLY"):
            self.pos += 1
            role = self.take("OID", "a role OID").value
            self.take("DOT", "'.'")
            filler = self.unary()
            return Exists(role, filler) if tok.kind == "SOME" else Forall(role, filler)
        if tok.kind == "LPAREN":
            self.pos += 1
            e = self.expr()
            self.take("RPAREN", "')'")
            return e
        self.pos += 1
        if tok.kind == "OID":
            return Atom(tok.value)
        if tok.kind == "STRING":
            return NlAtom(tok.value)
        if tok.kind == "TOP":
            return TOP
        if tok.kind == "BOTTOM":
            return BOTTOM
        self.pos -= 1
        self.fail("expected a concept", tok)


def parse_concept(text: str, *, offset: int = 0) -> ConceptExpr:
    """Parse and normalize a concept expression.

    ``offset`` shifts reported columns when ``text`` is a slice of a line.
    """
    return normalize(_Parser(text, offset).parse())


# --- rendering -----------------------------------------------------------


def quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_concept(e: ConceptExpr) -> str:
    if isinstance(e, Top):
        return "top"
    if isinstance(e, Bottom):
        return "bottom"
    if isinstance(e, Atom):
        return str(e.oid)
    if isinstance(e, NlAtom):
        return f"{quote(e.unit.text)}@{e.unit.lang}"
    if isinstance(e, Not):
        return f"not {_render_unary(e.operand)}"
    if isinstance(e, Exists):
        return f"some {e.role} . {_render_unary(e.filler)}"
    if isinstance(e, Forall):
        return f"only {e.role} . {_render_unary(e.filler)}"
    if isinstance(e, And):
        return " and ".join(_render_unary(o) for o in e.operands)
    if isinstance(e, Or):
        return " or ".join(_render_unary(o) for o in e.operands)
    raise TypeError(f"not a concept expression: {e!r}")


def _render_unary(e: ConceptExpr) -> str:
    s = render_concept(e)
    return f"({s})" if isinstance(e, (And, Or)) else s


def serialize_statement(s: OidStatement | Hri | Meta) -> str:
    if isinstance(s, OidStatement):
        return f"{s.subject} | {s.indicator.value} | {s.condition.value} | {render_concept(s.characterization)}"
    if isinstance(s, Hri):
        return f"{s.subject} | HRI | {quote(s.label)}@{s.lang}"
    if isinstance(s, Meta):
        return f"{s.subject} | Meta | {s.key} | {quote(s.value)}"
    raise TypeError(f"not a statement: {s!r}")


def serialize_axiom(a: DlAxiom) -> str:
    op = "subclass-of" if isinstance(a, Sub) else "equivalent-to"
    return f"{_render_unary(a.lhs)} {op} {_render_unary(a.rhs)}"


# --- statements ------------------------------------------------------------

_INDICATORS = {
    "Analytic": Indicator.ANALYTIC,
    "A": Indicator.ANALYTIC,
    "Synthetic": Indicator.SYNTHETIC,
    "S": Indicator.SYNTHETIC,
}
_CONDITIONS = {c.value: c for c in Condition}


def _scan_outside_quotes(line: str):
    """Yield (index, char, in_string) for every character of ``line``."""
    in_string = False
    escaped = False
    for i, ch in enumerate(line):
        if in_string:
            yield i, ch, True
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
        else:
            if ch == '"':
                in_string = True
            yield i, ch, in_string


def strip_comment(line: str) -> str:
    for i, ch, in_string in _scan_outside_quotes(line):
        if ch == "#" and not in_string:
            return line[:i]
    return line


def _split_fields(line: str) -> list[tuple[str, int]]:
    """Split on unquoted pipes; each field comes back stripped with its 0-based column."""
    fields = []
    start = 0
    for i, ch, in_string in _scan_outside_quotes(line):
        if ch == "|" and not in_string:
            fields.append((start, i))
            start = i + 1
    fields.append((start, len(line)))
    out = []
    for a, b in fields:
        raw = line[a:b]
        lead = len(raw) - len(raw.lstrip())
        out.append((raw.strip(), a + lead))
    return out


def _unquote(text: str) -> str | None:
    if len(text) >= 2 and text[0] == '"':
        try:
            value, end = _read_string(text, 0, 0)
        except ConceptSyntaxError:
            return None
        if end == len(text):
            return value
    return None


def parse_statement(line: str, lineno: int = 1, *, strict: bool = False):
    """Parse one line into an OidStatement, Hri, Meta, or a ParseDiagnostic.

    With ``strict`` set, ``bottom`` and universal restrictions are refused
    in characterizations.
    """

    def error(col: int, code: str, message: str) -> ParseDiagnostic:
        return ParseDiagnostic(lineno, col + 1, Severity.ERROR, message, code)

    fields = _split_fields(line)
    if len(fields) < 3 or len(fields) > 4:
        return error(0, "field-count", f"expected 3 or 4 '|'-separated fields, found {len(fields)}")
    (subj_text, subj_col), (kind_text, kind_col) = fields[0], fields[1]

    m = OID_RE.fullmatch(subj_text)
    if m is None:
        return error(subj_col, "bad-subject", "subject must be an OID")
    subject = Oid(m.group(1), m.group(2))

    if kind_text == "HRI":
        if len(fields) != 3:
            return error(kind_col, "field-count", "HRI lines take exactly 3 fields")
        text, col = fields[2]
        try:
            tokens = _tokenize(text, col)
        except ConceptSyntaxError as exc:
            return error(exc.column - 1, exc.code, exc.message)
        if len(tokens) != 2 or tokens[0].kind != "STRING":
            return error(col, "bad-hri", 'HRI must be a single "label"@lang string')
        unit = tokens[0].value
        return Hri(subject, unit.text, unit.lang)

    if kind_text == "Meta":
        if len(fields) != 4:
            return error(kind_col, "field-count", "Meta lines take exactly 4 fields")
        (key, key_col), (value, _) = fields[2], fields[3]
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.:-]*", key):
            return error(key_col, "bad-meta-key", f"bad metadata key {key!r}")
        unquoted = _unquote(value)
        return Meta(subject, key, unquoted if unquoted is not None else value)

    if len(fields) != 4:
        return error(kind_col, "field-count", "OID statements take exactly 4 fields")
    indicator = _INDICATORS.get(kind_text)
    if indicator is None:
        return error(kind_col, "bad-indicator", f"unknown indicator {kind_text!r} (expected Analytic or Synthetic)")
    cond_text, cond_col = fields[2]
    condition = _CONDITIONS.get(cond_text)
    if condition is None:
        return error(cond_col, "bad-condition", f"unknown condition {cond_text!r} (expected has_NC, has_SC or has_NSC)")
    char_text, char_col = fields[3]
    try:
        char = _Parser(char_text, char_col).parse()
    except ConceptSyntaxError as exc:
        return error(exc.column - 1, exc.code, exc.message)
    if strict:
        from .model import walk

        for node in walk(char):
            if isinstance(node, (Bottom, Forall)):
                return error(char_col, "strict-profile", "bottom and 'only' are not allowed in the strict profile")
    return OidStatement(subject, indicator, condition, char)


def parse_collection(text: str, *, strict: bool = False) -> tuple[Collection, list[ParseDiagnostic]]:
    """Parse a whole ``.ocs`` document.

    Bad lines are reported and skipped; the rest of the collection is still
    returned.
    """
    diagnostics: list[ParseDiagnostic] = []
    version = ""
    iri_base = None
    oid_stmts: dict[Oid, dict] = {}
    oc_stmts: dict[Oid, dict] = {}
    hri_owner: dict[tuple[str, str], Oid] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("@"):
            col = line.index("@")
            name, _, arg = stripped[1:].partition(" ")
            arg = arg.strip()
            if name == "version" and arg:
                version = arg
            elif name == "base" and arg:
                iri_base = arg.strip("<>")
            else:
                diagnostics.append(
                    ParseDiagnostic(lineno, col + 1, Severity.ERROR, f"unknown or empty pragma {stripped!r}", "bad-pragma")
                )
            continue
        result = parse_statement(line, lineno, strict=strict)
        if isinstance(result, ParseDiagnostic):
            diagnostics.append(result)
            continue
        oid = result.subject
        oid_stmts.setdefault(oid, {})
        oc_stmts.setdefault(oid, {})
        bucket = oid_stmts[oid] if isinstance(result, OidStatement) else oc_stmts[oid]
        if result in bucket:
            diagnostics.append(
                ParseDiagnostic(
                    lineno, 1, Severity.WARNING,
                    f"duplicate of the statement on line {bucket[result]}", "duplicate",
                )
            )
            continue
        bucket[result] = lineno
        if isinstance(result, Hri):
            owner = hri_owner.setdefault((result.label, result.lang), oid)
            if owner != oid:
                diagnostics.append(
                    ParseDiagnostic(
                        lineno, 1, Severity.WARNING,
                        f"HRI {quote(result.label)}@{result.lang} is also used by {owner}", "hri-collision",
                    )
                )

    components = {oid: OntologicalComponent(oid, oid_stmts[oid], oc_stmts[oid]) for oid in oid_stmts}
    return Collection(components, version, iri_base), diagnostics


def primitive_diagnostic(collection: Collection) -> ParseDiagnostic | None:
    prims = collection.list_primitives()
    if not prims:
        return None
    names = ", ".join(str(p) for p in prims)
    return ParseDiagnostic(0, 0, Severity.INFO, f"primitive references: {names}", "primitives")


__all__ = [
    "ConceptSyntaxError",
    "ParseDiagnostic",
    "Severity",
    "mentioned_oids",
    "parse_collection",
    "parse_concept",
    "parse_statement",
    "primitive_diagnostic",
    "render_concept",
    "serialize_axiom",
    "serialize_statement",
]
