"""RDF term model: IRIs, labelled blank nodes, typed literals and triples."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_BNODE_LABEL = re.compile(r"^[A-Za-z0-9_]+$")
_IRI_FORBIDDEN = set('<>"{}|^`\\')


class TermError(ValueError):
    """Raised when a term or triple would violate the RDF abstract syntax."""


@dataclass(frozen=True, order=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, str) or not v:
            raise TermError("IRI must be a non-empty string")
        if any(c.isspace() for c in v) or _IRI_FORBIDDEN.intersection(v):
            raise TermError(f"IRI contains forbidden characters: {v!r}")
        if not _SCHEME.match(v):
            raise TermError(f"IRI is not absolute: {v!r}")

    def __str__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, order=True)
class BlankNode:
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not _BNODE_LABEL.match(self.label):
            raise TermError(f"invalid blank node label: {self.label!r}")

    def __str__(self) -> str:
        return f"_:{self.label}"


XSD_STRING = Iri(XSD_NS + "string")


@dataclass(frozen=True, order=True)
class Literal:
    """A literal compared by its (lexical form, datatype) pair only."""

    lexical: str
    datatype: Iri = XSD_STRING

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise TermError("literal lexical form must be a string")
        if not isinstance(self.datatype, Iri):
            raise TermError("literal datatype must be an IRI")

    def __str__(self) -> str:
        return f'"{escape_string(self.lexical)}"^^{self.datatype}'


Term = Union[Iri, BlankNode, Literal]

RDF_TYPE = Iri(RDF_NS + "type")


def escape_string(s: str) -> str:
    return (
        s.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\t", "\\t")
    )


def term_key(term: Term) -> tuple:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "")
    if isinstance(term, BlankNode):
        return (1, term.label, "")
    return (2, term.lexical, term.datatype.value)


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise TermError(f"subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TermError(f"predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise TermError(f"object must be an RDF term, got {self.object!r}")

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    def key(self) -> tuple:
        return (term_key(self.subject), term_key(self.predicate), term_key(self.object))

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


class TriplePattern(NamedTuple):
    """A triple with optional positions; ``None`` is a wildcard."""

    subject: Optional[Term] = None
    predicate: Optional[Term] = None
    object: Optional[Term] = None

    def matches(self, t: Triple) -> bool:
        return (
            (self.subject is None or self.subject == t.subject)
            and (self.predicate is None or self.predicate == t.predicate)
            and (self.object is None or self.object == t.object)
        )
