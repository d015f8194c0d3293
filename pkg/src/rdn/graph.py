"""Immutable in-memory triple graph with indexed pattern matching."""

from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

from .terms import (
    OWL_NS,
    RDF_NS,
    RDFS_NS,
    XSD_NS,
    Iri,
    Term,
    Triple,
    TriplePattern,
)

DEFAULT_NAMESPACE = "https://example.org/rdn#"


def default_prefixes(base: str = DEFAULT_NAMESPACE) -> dict[str, str]:
    """Prefixes available to every document without an ``@prefix`` line."""
    return {"": base, "owl": OWL_NS, "rdf": RDF_NS, "rdfs": RDFS_NS, "xsd": XSD_NS}


class UnknownPrefixError(KeyError):
    def __init__(self, prefix: str):
        super().__init__(prefix)
        self.prefix = prefix

    def __str__(self) -> str:
        return f"unknown prefix {self.prefix!r}"


def expand(prefixed: str, prefixes: Mapping[str, str]) -> Iri:
    """Expand ``prefix:local`` against ``prefixes``.

    >>> expand("xsd:string", {"xsd": "http://www.w3.org/2001/XMLSchema#"})
    Iri(value='http://www.w3.org/2001/XMLSchema#string')
    """
    prefix, sep, local = prefixed.partition(":")
    if not sep:
        raise ValueError(f"not a prefixed name: {prefixed!r}")
    try:
        ns = prefixes[prefix]
    except KeyError:
        raise UnknownPrefixError(prefix) from None
    return Iri(ns + local)


class Graph:
    """A finite set of triples plus the prefix map used to print them.

    Graphs never change after construction; :meth:`insert` and :meth:`union`
    return new graphs. Equality compares triple sets only, with blank-node
    labels taken literally.
    """

    __slots__ = ("_triples", "_prefixes", "_index")

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Optional[Mapping[str, str]] = None,
    ):
        ts = frozenset(triples)
        for t in ts:
            if not isinstance(t, Triple):
                raise TypeError(f"not a Triple: {t!r}")
        self._triples = ts
        self._prefixes = MappingProxyType(
            dict(default_prefixes() if prefixes is None else prefixes)
        )
        self._index = None

    @property
    def triples(self) -> frozenset[Triple]:
        return self._triples

    @property
    def prefixes(self) -> Mapping[str, str]:
        return self._prefixes

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"<Graph with {len(self)} triples>"

    def __le__(self, other: "Graph") -> bool:
        return self._triples <= other._triples

    def insert(self, t: Triple) -> "Graph":
        if t in self._triples:
            return self
        return Graph(self._triples | {t}, self._prefixes)

    def union(self, triples: Iterable[Triple]) -> "Graph":
        return Graph(self._triples.union(triples), self._prefixes)

    def difference(self, triples: Iterable[Triple]) -> "Graph":
        return Graph(self._triples.difference(triples), self._prefixes)

    def with_prefixes(self, prefixes: Mapping[str, str]) -> "Graph":
        return Graph(self._triples, prefixes)

    def sorted(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.key)

    def _indexes(self):
        # Built lazily; a race only rebuilds an identical index.
        idx = self._index
        if idx is None:
            s, p, o = defaultdict(set), defaultdict(set), defaultdict(set)
            for t in self._triples:
                s[t.subject].add(t)
                p[t.predicate].add(t)
                o[t.object].add(t)
            idx = self._index = (s, p, o)
        return idx

    def match(
        self,
        subject: Optional[Term] = None,
        predicate: Optional[Term] = None,
        object: Optional[Term] = None,
    ) -> set[Triple]:
        """Triples agreeing with every bound position."""
        pattern = TriplePattern(subject, predicate, object)
        bound = [i for i, v in enumerate(pattern) if v is not None]
        if not bound:
            return set(self._triples)
        idx = self._indexes()
        candidates = min(
            (idx[i].get(pattern[i], ()) for i in bound), key=len
        )
        return {t for t in candidates if pattern.matches(t)}

    def match_pattern(self, pattern: TriplePattern) -> set[Triple]:
        return self.match(*pattern)

    def terms(self) -> set[Term]:
        out: set[Term] = set()
        for t in self._triples:
            out.update(t)
        return out


def insert(graph: Graph, t: Triple) -> Graph:
    return graph.insert(t)


def match(graph: Graph, pattern: TriplePattern) -> set[Triple]:
    return graph.match_pattern(pattern)


def equal(g1: Graph, g2: Graph) -> bool:
    return g1.triples == g2.triples
