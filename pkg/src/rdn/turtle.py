"""Reader and deterministic writer for a small Turtle subset.

Supported: ``@prefix`` directives, ``<absolute-IRI>`` references, prefixed
names, ``_:label`` blank nodes, double-quoted single-line strings with an
optional ``^^datatype``, the ``a`` keyword, ``;`` predicate lists, ``,``
object lists and ``#`` comments. Anything else is a parse error.
"""

from __future__ import annotations

import enum
import re
import warnings
from dataclasses import dataclass
from typing import Mapping, Optional

from .graph import DEFAULT_NAMESPACE, Graph, default_prefixes
from .terms import (
    RDF_TYPE,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    TermError,
    Triple,
    escape_string,
)

_PN_PREFIX = r"(?:[A-Za-z][A-Za-z0-9_\-]*)?"
_PN_LOCAL = r"(?:[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?"
_PNAME = re.compile(_PN_PREFIX + ":" + _PN_LOCAL)
_LOCAL_FULL = re.compile(_PN_LOCAL + r"\Z")
_BNODE = re.compile(r"_:[A-Za-z0-9_]+")
_WORD = re.compile(r"[A-Za-z_@][A-Za-z0-9_\-]*")
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


class ParseErrorKind(enum.Enum):
    UNEXPECTED_TOKEN = "UnexpectedToken"
    UNKNOWN_PREFIX = "UnknownPrefix"
    UNTERMINATED_STRING = "UnterminatedString"
    MALFORMED_IRI = "MalformedIri"

    def __str__(self) -> str:
        return self.value


class ParseError(ValueError):
    def __init__(self, line: int, column: int, kind: ParseErrorKind, message: str):
        super().__init__(f"line {line}, column {column}: {kind}: {message}")
        self.line = line
        self.column = column
        self.kind = kind
        self.message = message


class DuplicatePrefixWarning(UserWarning):
    pass


@dataclass(frozen=True)
class _Token:
    kind: str  # PREFIX IRI PNAME BNODE STRING DTYPE DOT SEMI COMMA A EOF
    text: str
    line: int
    column: int


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _error(self, kind: ParseErrorKind, msg: str, line=None, col=None):
        return ParseError(line or self.line, col or self.col, kind, msg)

    def _advance(self, n: int) -> None:
        for ch in self.text[self.pos : self.pos + n]:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n

    def _skip_space(self) -> None:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch == "#":
                end = text.find("\n", self.pos)
                self._advance((len(text) if end < 0 else end) - self.pos)
            elif ch.isspace():
                self._advance(1)
            else:
                break

    def next_token(self) -> _Token:
        self._skip_space()
        return self._next()

    def _next(self) -> _Token:
        text, pos = self.text, self.pos
        line, col = self.line, self.col
        if pos >= len(text):
            return _Token("EOF", "", line, col)
        ch = text[pos]

        def emit(kind: str, length: int, value: Optional[str] = None) -> _Token:
            raw = text[pos : pos + length]
            self._advance(length)
            return _Token(kind, raw if value is None else value, line, col)

        if ch == "<":
            end = pos + 1
            while end < len(text) and text[end] != ">":
                c = text[end]
                if c.isspace() or c in '<"{}|^`\\':
                    self._advance(end - pos)
                    raise self._error(
                        ParseErrorKind.MALFORMED_IRI, f"illegal character {c!r} in IRI"
                    )
                end += 1
            if end >= len(text):
                raise self._error(ParseErrorKind.MALFORMED_IRI, "unterminated IRI")
            value = text[pos + 1 : end]
            try:
                Iri(value)
            except TermError as exc:
                raise self._error(ParseErrorKind.MALFORMED_IRI, str(exc)) from None
            return emit("IRI", end - pos + 1, value)
        if ch == '"':
            return self._string()
        if text.startswith("^^", pos):
            return emit("DTYPE", 2)
        if ch in ".;,":
            return emit({".": "DOT", ";": "SEMI", ",": "COMMA"}[ch], 1)
        if text.startswith("_:", pos):
            m = _BNODE.match(text, pos)
            if not m:
                raise self._error(ParseErrorKind.UNEXPECTED_TOKEN, "malformed blank node label")
            return emit("BNODE", m.end() - pos, m.group()[2:])
        m = _PNAME.match(text, pos)
        if m:
            return emit("PNAME", m.end() - pos)
        m = _WORD.match(text, pos)
        if m:
            word = m.group()
            if word == "@prefix":
                return emit("PREFIX", len(word))
            if word == "a":
                return emit("A", 1)
            raise self._error(ParseErrorKind.UNEXPECTED_TOKEN, f"unexpected {word!r}")
        raise self._error(ParseErrorKind.UNEXPECTED_TOKEN, f"unexpected character {ch!r}")

    def _string(self) -> _Token:
        text = self.text
        line, col = self.line, self.col
        i = self.pos + 1
        chars = []
        while True:
            if i >= len(text) or text[i] == "\n":
                raise ParseError(
                    line, col, ParseErrorKind.UNTERMINATED_STRING, "string literal not closed"
                )
            c = text[i]
            if c == '"':
                break
            if c == "\\":
                nxt = text[i + 1 : i + 2]
                if nxt not in _ESCAPES:
                    self._advance(i - self.pos)
                    raise self._error(
                        ParseErrorKind.UNEXPECTED_TOKEN, f"unsupported escape \\{nxt}"
                    )
                chars.append(_ESCAPES[nxt])
                i += 2
                continue
            chars.append(c)
            i += 1
        self._advance(i + 1 - self.pos)
        return _Token("STRING", "".join(chars), line, col)


class _Parser:
    def __init__(self, text: str, base: str):
        # Tokens are lexed on demand so errors surface in document order.
        self.lexer = _Lexer(text)
        self.toks: list[_Token] = []
        self.i = 0
        self.prefixes = default_prefixes(base)
        self.declared: set[str] = set()
        self.triples: set[Triple] = set()

    @property
    def tok(self) -> _Token:
        while len(self.toks) <= self.i:
            self.toks.append(self.lexer.next_token())
        return self.toks[self.i]

    def _fail(self, expected: str) -> ParseError:
        tok = self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        return ParseError(
            tok.line, tok.column, ParseErrorKind.UNEXPECTED_TOKEN,
            f"expected {expected}, found {found}",
        )

    def _take(self, *kinds: str, expected: str) -> _Token:
        tok = self.tok
        if tok.kind not in kinds:
            raise self._fail(expected)
        self.i += 1
        return tok

    def _pname(self, tok: _Token) -> Iri:
        prefix, _, local = tok.text.partition(":")
        if prefix not in self.prefixes:
            raise ParseError(
                tok.line, tok.column, ParseErrorKind.UNKNOWN_PREFIX,
                f"prefix {prefix!r} is not declared",
            )
        try:
            return Iri(self.prefixes[prefix] + local)
        except TermError as exc:
            raise ParseError(
                tok.line, tok.column, ParseErrorKind.MALFORMED_IRI, str(exc)
            ) from None

    def _iri(self, tok: _Token) -> Iri:
        return Iri(tok.text) if tok.kind == "IRI" else self._pname(tok)

    def document(self) -> Graph:
        while self.tok.kind != "EOF":
            if self.tok.kind == "PREFIX":
                self._directive()
            else:
                self._statement()
        return Graph(self.triples, self.prefixes)

    def _directive(self) -> None:
        self.i += 1
        tok = self._take("PNAME", expected="prefix name")
        prefix, _, local = tok.text.partition(":")
        if local:
            raise ParseError(
                tok.line, tok.column, ParseErrorKind.UNEXPECTED_TOKEN,
                f"prefix declaration {tok.text!r} must end with ':'",
            )
        ns = self._take("IRI", expected="namespace IRI").text
        self._take("DOT", expected="'.'")
        if prefix in self.declared and self.prefixes[prefix] != ns:
            warnings.warn(
                f"line {tok.line}: prefix {prefix!r} redeclared; last declaration wins",
                DuplicatePrefixWarning,
                stacklevel=4,
            )
        self.declared.add(prefix)
        self.prefixes[prefix] = ns

    def _statement(self) -> None:
        tok = self._take("IRI", "PNAME", "BNODE", expected="subject")
        subject = BlankNode(tok.text) if tok.kind == "BNODE" else self._iri(tok)
        while True:
            vt = self._take("IRI", "PNAME", "A", expected="predicate")
            verb = RDF_TYPE if vt.kind == "A" else self._iri(vt)
            while True:
                self.triples.add(Triple(subject, verb, self._object()))
                if self.tok.kind != "COMMA":
                    break
                self.i += 1
            if self.tok.kind != "SEMI":
                break
            while self.tok.kind == "SEMI":
                self.i += 1
            if self.tok.kind == "DOT":
                break
        self._take("DOT", expected="'.'")

    def _object(self) -> Term:
        tok = self._take("IRI", "PNAME", "BNODE", "STRING", expected="object")
        if tok.kind == "BNODE":
            return BlankNode(tok.text)
        if tok.kind != "STRING":
            return self._iri(tok)
        if self.tok.kind == "DTYPE":
            self.i += 1
            dt = self._take("IRI", "PNAME", expected="datatype IRI")
            return Literal(tok.text, self._iri(dt))
        return Literal(tok.text, XSD_STRING)


def parse(text: str, base: str = DEFAULT_NAMESPACE) -> Graph:
    """Parse a Turtle document into a :class:`Graph`.

    The ``:`` prefix defaults to ``base``; ``rdf``, ``rdfs``, ``xsd`` and
    ``owl`` are predeclared. Raises :class:`ParseError` on the first error;
    no partial graph is ever returned.
    """
    return _Parser(text, base).document()


def parse_term(text: str, prefixes: Mapping[str, str]) -> Term:
    """Parse one standalone term (``a`` means ``rdf:type``)."""
    p = _Parser(text, DEFAULT_NAMESPACE)
    p.prefixes = dict(prefixes)
    tok = p._take("IRI", "PNAME", "BNODE", "STRING", "A", expected="a term")
    if tok.kind == "A":
        term: Term = RDF_TYPE
    elif tok.kind == "BNODE":
        term = BlankNode(tok.text)
    elif tok.kind == "STRING":
        p.i -= 1
        term = p._object()
    else:
        term = p._iri(tok)
    p._take("EOF", expected="end of term")
    return term


class Compactor:
    """Render terms using the shortest matching prefix."""

    def __init__(self, prefixes: Mapping[str, str]):
        # Longest namespace first so nested namespaces win.
        self._ns = sorted(prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    def iri(self, iri: Iri) -> str:
        v = iri.value
        for prefix, ns in self._ns:
            if ns and v.startswith(ns) and _LOCAL_FULL.match(v, len(ns)):
                return f"{prefix}:{v[len(ns):]}"
        return f"<{v}>"

    def term(self, term: Term) -> str:
        if isinstance(term, Iri):
            return self.iri(term)
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        return f'"{escape_string(term.lexical)}"^^{self.iri(term.datatype)}'

    def predicate(self, iri: Iri) -> str:
        return "a" if iri == RDF_TYPE else self.iri(iri)

    def triple(self, t: Triple) -> str:
        return f"{self.term(t.subject)} {self.predicate(t.predicate)} {self.term(t.object)}"


def serialize(graph: Graph) -> str:
    """Deterministic Turtle for ``graph``.

    Prefix directives are sorted by prefix; subjects, predicates and objects
    are sorted by their expanded form. Output depends only on the triple set
    and the prefix map.
    """
    prefixes = graph.prefixes
    c = Compactor(prefixes)
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(prefixes.items())]
    by_subject: dict[Term, dict[Iri, list[Term]]] = {}
    for t in graph.sorted():
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    for subject, preds in by_subject.items():
        lines.append("")
        parts = [
            f"{c.predicate(p)} {', '.join(c.term(o) for o in objs)}"
            for p, objs in preds.items()
        ]
        head = c.term(subject)
        lines.append(f"{head} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + "\n"

