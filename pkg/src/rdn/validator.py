"""Closed-world validation of the pattern's constraint-kind axioms.

Max-cardinality axioms are read under the unique name assumption: two
different terms sharing a role (or a name) are a violation, not evidence
that the terms co-refer. The existential axiom is read closed-world: an
Agent with no ``hasName`` triple in the checked graph is reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .engine import compile_rules, default_rules, materialize
from .graph import Graph
from .terms import RDF_TYPE, Iri, Term, Triple, term_key
from .vocab import RDN, Axiom, AxiomKind, Vocabulary, tbox

REPORT_VERSION = 1


@dataclass(frozen=True)
class Constraint:
    id: str
    axiom_index: int
    description: str


def _describe(ax: Axiom) -> str:
    p = ax.participants
    if ax.kind is AxiomKind.EXISTENTIAL_CONSTRAINT:
        return f"every {p[0]} has at least one {p[1]} successor"
    if ax.kind is AxiomKind.INVERSE_FUNCTIONAL_CONSTRAINT:
        return f"every {p[0]} has at most one {p[1]} predecessor"
    return f"nothing is both {p[0]} and {p[1]}"


_CONSTRAINTS = tuple(
    Constraint(f"C{ax.index}", ax.index, _describe(ax))
    for ax in tbox()
    if ax.generates_constraint
)


def constraints() -> tuple[Constraint, ...]:
    """The six checked constraints, in axiom order."""
    return _CONSTRAINTS


@dataclass(frozen=True)
class Violation:
    constraint: str
    focus: Term
    witnesses: tuple[Triple, ...]
    message: str

    def sort_key(self) -> tuple:
        return (int(self.constraint[1:]), term_key(self.focus))

    def to_dict(self) -> dict:
        return {
            "constraint": self.constraint,
            "focus": _term_text(self.focus),
            "witnesses": [str(w) for w in self.witnesses],
            "message": self.message,
        }


def _term_text(term: Term) -> str:
    return term.value if isinstance(term, Iri) else str(term)


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]
    checked_graph_size: int
    materialized: bool
    unique_names: bool
    not_evaluated: tuple[str, ...] = field(default=())

    @property
    def conforms(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def by_constraint(self, cid: str) -> list[Violation]:
        return [v for v in self.violations if v.constraint == cid]

    def to_text(self) -> str:
        """One ``<constraint-id> <focus-iri> <n-witnesses>`` line per violation."""
        return "".join(
            f"{v.constraint} {_term_text(v.focus)} {len(v.witnesses)}\n"
            for v in self.violations
        )

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "conforms": self.conforms,
            "checked_graph_size": self.checked_graph_size,
            "materialized": self.materialized,
            "unique_names": self.unique_names,
            "not_evaluated": list(self.not_evaluated),
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def _typed(graph: Graph, cls: Term) -> dict[Term, Triple]:
    return {t.subject: t for t in graph.match(None, RDF_TYPE, cls)}


def _check_existential(graph, ax, vocab):
    cls, prop, _ = ax.participants
    for x, typing in _typed(graph, vocab[cls]).items():
        if not graph.match(x, vocab[prop], None):
            yield Violation(f"C{ax.index}", x, (typing,), f"{cls} {x} has no {prop}")


def _check_inverse_functional(graph, ax, vocab):
    cls, prop, _ = ax.participants
    for y in _typed(graph, vocab[cls]):
        incoming = sorted(graph.match(None, vocab[prop], y), key=Triple.key)
        if len(incoming) > 1:
            who = ", ".join(str(t.subject) for t in incoming)
            yield Violation(
                f"C{ax.index}", y, tuple(incoming),
                f"{cls} {y} has {len(incoming)} {prop} predecessors: {who}",
            )


def _check_disjoint(graph, ax, vocab):
    a, b = ax.participants
    typed_a, typed_b = _typed(graph, vocab[a]), _typed(graph, vocab[b])
    for x in typed_a.keys() & typed_b.keys():
        yield Violation(
            f"C{ax.index}", x, (typed_a[x], typed_b[x]),
            f"{x} is typed both {a} and {b}",
        )


_CHECKERS = {
    AxiomKind.EXISTENTIAL_CONSTRAINT: _check_existential,
    AxiomKind.INVERSE_FUNCTIONAL_CONSTRAINT: _check_inverse_functional,
    AxiomKind.DISJOINTNESS_CONSTRAINT: _check_disjoint,
}


def check(
    graph: Graph,
    *,
    materialize_first: bool = True,
    unique_names: bool = True,
    vocab: Vocabulary = RDN,
) -> ViolationReport:
    """Evaluate every constraint and collect all violations.

    With ``materialize_first`` the constraints see the fixpoint, so
    implicit typings count. With ``unique_names=False`` C4 and C9 are not
    evaluated and are listed in ``not_evaluated``.
    """
    if materialize_first:
        rules = default_rules() if vocab == RDN else compile_rules(tbox(), vocab)
        checked = materialize(graph, rules)[0]
    else:
        checked = graph
    found: list[Violation] = []
    skipped: list[str] = []
    for ax in tbox():
        if not ax.generates_constraint:
            continue
        if ax.kind is AxiomKind.INVERSE_FUNCTIONAL_CONSTRAINT and not unique_names:
            skipped.append(f"C{ax.index}")
            continue
        found.extend(_CHECKERS[ax.kind](checked, ax, vocab))
    found.sort(key=Violation.sort_key)
    return ViolationReport(
        tuple(found), len(checked), materialize_first, unique_names, tuple(skipped)
    )
