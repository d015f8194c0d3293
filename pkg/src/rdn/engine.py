"""Forward-chaining materialization of the pattern's rule-kind axioms.

Rule-kind axioms compile into Horn rules over triple patterns. The engine
evaluates them semi-naively in rounds: a round joins at least one premise
against the triples that were new in the previous round, and conclusions
of round ``k`` only become visible in round ``k + 1``. Rules never mint
terms, so every finite graph reaches a finite fixpoint.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .graph import Graph
from .terms import RDF_TYPE, BlankNode, Iri, Term, Triple
from .vocab import RDN, Axiom, AxiomKind, Vocabulary, tbox


class CompileError(ValueError):
    pass


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


Slot = Union[Var, Term]


@dataclass(frozen=True)
class Atom:
    subject: Slot
    predicate: Iri
    object: Slot

    def __str__(self) -> str:
        return f"({self.subject} {self.predicate} {self.object})"

    def variables(self) -> set[Var]:
        return {v for v in (self.subject, self.object) if isinstance(v, Var)}


@dataclass(frozen=True)
class Rule:
    id: str
    axiom: int
    premises: tuple[Atom, ...]
    conclusion: Atom

    def __post_init__(self) -> None:
        bound = set().union(*(p.variables() for p in self.premises))
        if not self.conclusion.variables() <= bound:
            raise CompileError(f"{self.id}: conclusion introduces unbound variables")

    def __str__(self) -> str:
        body = " ∧ ".join(map(str, self.premises))
        return f"{self.id}: {body} ⇒ {self.conclusion}"


X, Y, Z = Var("x"), Var("y"), Var("z")


def _compile_one(ax: Axiom, v: Vocabulary) -> Optional[Rule]:
    kind, p = ax.kind, ax.participants
    rid = f"R{ax.index}"
    if kind is AxiomKind.SCOPED_DOMAIN_RULE:
        prop, filler, cls = p
        return Rule(rid, ax.index,
                    (Atom(X, v[prop], Y), Atom(Y, RDF_TYPE, v[filler])),
                    Atom(X, RDF_TYPE, v[cls]))
    if kind is AxiomKind.SCOPED_RANGE_RULE:
        cls, prop, filler = p
        return Rule(rid, ax.index,
                    (Atom(X, RDF_TYPE, v[cls]), Atom(X, v[prop], Y)),
                    Atom(Y, RDF_TYPE, v[filler]))
    if kind is AxiomKind.GLOBAL_RANGE_RULE:
        prop, cls = p
        return Rule(rid, ax.index, (Atom(X, v[prop], Y),), Atom(Y, RDF_TYPE, v[cls]))
    if kind is AxiomKind.GLOBAL_DOMAIN_RULE:
        prop, cls = p
        return Rule(rid, ax.index, (Atom(X, v[prop], Y),), Atom(X, RDF_TYPE, v[cls]))
    if kind is AxiomKind.PROPERTY_CHAIN_RULE:
        first, second, sup = p
        links = []
        for prop, (a, b) in ((first, (X, Y)), (second, (Y, Z))):
            links.append(Atom(b, v[prop], a) if prop in ax.inverted else Atom(a, v[prop], b))
        return Rule(rid, ax.index, tuple(links), Atom(X, v[sup], Z))
    if kind.is_constraint or kind is AxiomKind.STRUCTURAL_TAUTOLOGY:
        return None
    raise CompileError(f"axiom ({ax.index}): unsupported kind {kind}")


def compile_rules(axioms: Optional[Iterable[Axiom]] = None, vocab: Vocabulary = RDN) -> list[Rule]:
    """Compile the rule-kind axioms; constraints and tautologies yield nothing."""
    if axioms is None:
        axioms = tbox()
    rules = []
    for ax in axioms:
        if not isinstance(getattr(ax, "kind", None), AxiomKind):
            raise CompileError(f"unknown axiom kind: {getattr(ax, 'kind', None)!r}")
        rule = _compile_one(ax, vocab)
        if rule is not None:
            rules.append(rule)
    return rules


# -- matching ----------------------------------------------------------------


class _Store:
    """Predicate-first index: p -> s -> {o} and p -> o -> {s}."""

    def __init__(self, triples: Iterable[Triple] = ()):
        self.triples: set[Triple] = set()
        self.sp = defaultdict(lambda: defaultdict(set))
        self.op = defaultdict(lambda: defaultdict(set))
        for t in triples:
            self.add(t)

    def add(self, t: Triple) -> bool:
        if t in self.triples:
            return False
        self.triples.add(t)
        self.sp[t.predicate][t.subject].add(t.object)
        self.op[t.predicate][t.object].add(t.subject)
        return True

    def __contains__(self, t: Triple) -> bool:
        return t in self.triples

    def bindings(self, atom: Atom, env: dict) -> Iterator[dict]:
        s = env.get(atom.subject, atom.subject) if isinstance(atom.subject, Var) else atom.subject
        o = env.get(atom.object, atom.object) if isinstance(atom.object, Var) else atom.object
        s_free, o_free = isinstance(s, Var), isinstance(o, Var)
        p = atom.predicate
        if not s_free:
            objs = self.sp.get(p, {}).get(s, ())
            if not o_free:
                if o in objs:
                    yield env
                return
            for obj in objs:
                yield {**env, o: obj}
        elif not o_free:
            for subj in self.op.get(p, {}).get(o, ()):
                yield {**env, s: subj}
        else:
            same = s == o
            for subj, objs in self.sp.get(p, {}).items():
                for obj in objs:
                    if same and subj != obj:
                        continue
                    yield {**env, s: subj, o: obj}


def _ground(atom: Atom, env: Mapping) -> Optional[Triple]:
    s = env[atom.subject] if isinstance(atom.subject, Var) else atom.subject
    o = env[atom.object] if isinstance(atom.object, Var) else atom.object
    if not isinstance(s, (Iri, BlankNode)):
        # e.g. a range rule whose object is a literal: not expressible in RDF
        return None
    return Triple(s, atom.predicate, o)


def _join(store: _Store, atoms: Sequence[Atom], env: dict) -> Iterator[dict]:
    if not atoms:
        yield env
        return
    for env2 in store.bindings(atoms[0], env):
        yield from _join(store, atoms[1:], env2)


def _fire(rule: Rule, store: _Store, delta: Optional[_Store] = None):
    """Yield ``(conclusion, premise triples)`` for each rule instance.

    With ``delta``, only instances using at least one delta triple are
    produced (duplicates across seeds are possible and harmless).
    """
    seeds = range(len(rule.premises)) if delta is not None else (None,)
    for i in seeds:
        if i is None:
            envs = _join(store, rule.premises, {})
        else:
            rest = rule.premises[:i] + rule.premises[i + 1 :]
            envs = (
                e2
                for e in delta.bindings(rule.premises[i], {})
                for e2 in _join(store, rest, e)
            )
        for env in envs:
            t = _ground(rule.conclusion, env)
            if t is None:
                continue
            yield t, tuple(_ground(p, env) for p in rule.premises)


# -- traces ------------------------------------------------------------------


@dataclass(frozen=True)
class Derivation:
    rule: str
    premises: tuple[Triple, ...]
    round: int


@dataclass(frozen=True)
class DerivationTrace:
    """First derivation of every inferred triple."""

    asserted: frozenset[Triple]
    derivations: Mapping[Triple, Derivation]

    def __len__(self) -> int:
        return len(self.derivations)

    def __contains__(self, t: object) -> bool:
        return t in self.derivations

    def get(self, t: Triple) -> Optional[Derivation]:
        return self.derivations.get(t)

    def ordered(self) -> list[tuple[Triple, Derivation]]:
        return sorted(self.derivations.items(), key=lambda kv: (kv[1].round, kv[0].key()))


def _candidate_key(rule: Rule, premises: tuple[Triple, ...]) -> tuple:
    return (rule.axiom, tuple(p.key() for p in premises))


def materialize(
    graph: Graph, rules: Optional[Sequence[Rule]] = None
) -> tuple[Graph, DerivationTrace]:
    """Least fixpoint of ``rules`` (default: the compiled TBox) over ``graph``.

    Ties between several first derivations of the same triple in one round
    are broken by axiom index and then premise order, so the trace does not
    depend on the order of ``rules``.
    """
    if rules is None:
        rules = default_rules()
    store = _Store(graph)
    delta = _Store(graph)
    derivations: dict[Triple, Derivation] = {}
    rnd = 0
    while delta.triples:
        rnd += 1
        found: dict[Triple, tuple] = {}
        for rule in rules:
            for t, prem in _fire(rule, store, delta):
                if t in store:
                    continue
                key = _candidate_key(rule, prem)
                best = found.get(t)
                if best is None or key < best[0]:
                    found[t] = (key, rule.id, prem)
        delta = _Store()
        for t, (_, rid, prem) in found.items():
            derivations[t] = Derivation(rid, prem, rnd)
            delta.add(t)
        for t in delta.triples:
            store.add(t)
    out = Graph(store.triples, graph.prefixes)
    return out, DerivationTrace(frozenset(graph.triples), derivations)


def step(graph: Graph, rules: Optional[Sequence[Rule]] = None) -> set[Triple]:
    """One naive round: every conclusion derivable from ``graph`` that is new."""
    if rules is None:
        rules = default_rules()
    store = _Store(graph)
    return {t for rule in rules for t, _ in _fire(rule, store) if t not in store}


def materialize_naive(graph: Graph, rules: Optional[Sequence[Rule]] = None) -> Graph:
    """Reference semantics: repeat :func:`step` until nothing is new."""
    while True:
        new = step(graph, rules)
        if not new:
            return graph
        graph = graph.union(new)


_DEFAULT_RULES: Optional[tuple[Rule, ...]] = None


def default_rules() -> tuple[Rule, ...]:
    global _DEFAULT_RULES
    if _DEFAULT_RULES is None:
        _DEFAULT_RULES = tuple(compile_rules(tbox(), RDN))
    return _DEFAULT_RULES


# -- explanation -------------------------------------------------------------


class Status(enum.Enum):
    ASSERTED = "asserted"
    NOT_DERIVED = "not derivable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ProofNode:
    """A derivation tree; leaves have ``rule=None`` and are asserted triples."""

    triple: Triple
    rule: Optional[str] = None
    round: int = 0
    premises: tuple["ProofNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.rule is None

    def depth(self) -> int:
        return 1 + max((p.depth() for p in self.premises), default=0)

    def leaves(self) -> Iterator[Triple]:
        if self.is_leaf:
            yield self.triple
        for p in self.premises:
            yield from p.leaves()


def explain(trace: DerivationTrace, t: Triple) -> Union[ProofNode, Status]:
    """Derivation tree for ``t``, or a status when ``t`` was not inferred."""
    if t in trace.derivations:
        return _tree(trace, t)
    if t in trace.asserted:
        return Status.ASSERTED
    return Status.NOT_DERIVED


def _tree(trace: DerivationTrace, t: Triple) -> ProofNode:
    d = trace.derivations.get(t)
    if d is None:
        return ProofNode(t)
    # premises always come from strictly earlier rounds, so this terminates
    return ProofNode(t, d.rule, d.round, tuple(_tree(trace, p) for p in d.premises))


def render_proof(node: ProofNode, fmt=str, indent: str = "  ") -> str:
    lines: list[str] = []

    def walk(n: ProofNode, depth: int) -> None:
        tag = "asserted" if n.is_leaf else f"{n.rule}, round {n.round}"
        lines.append(f"{indent * depth}{fmt(n.triple)}  [{tag}]")
        for p in n.premises:
            walk(p, depth + 1)

    walk(node, 0)
    return "\n".join(lines)
