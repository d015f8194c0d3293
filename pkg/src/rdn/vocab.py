"""Vocabulary of the Role-Dependent Names pattern and its sixteen TBox axioms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import DEFAULT_NAMESPACE
from .terms import Iri

CLASS_NAMES = ("Agent", "AgentRole", "Name")
OBJECT_PROPERTY_NAMES = ("hasName", "assumesAgentRole", "providesAgentRole", "hasRoleUnderName")
DATA_PROPERTY_NAMES = ("hasNameAsString",)
SYMBOLS = CLASS_NAMES + OBJECT_PROPERTY_NAMES + DATA_PROPERTY_NAMES


@dataclass(frozen=True)
class Vocabulary:
    """The eight pattern IRIs (three classes, five properties) under one namespace."""

    namespace: str = DEFAULT_NAMESPACE

    Agent: Iri = field(init=False)
    AgentRole: Iri = field(init=False)
    Name: Iri = field(init=False)
    hasName: Iri = field(init=False)
    assumesAgentRole: Iri = field(init=False)
    providesAgentRole: Iri = field(init=False)
    hasRoleUnderName: Iri = field(init=False)
    hasNameAsString: Iri = field(init=False)

    def __post_init__(self) -> None:
        for sym in SYMBOLS:
            object.__setattr__(self, sym, Iri(self.namespace + sym))

    def __getitem__(self, symbol: str) -> Iri:
        if symbol not in SYMBOLS:
            raise KeyError(symbol)
        return getattr(self, symbol)

    def term(self, local: str) -> Iri:
        """An individual in the pattern namespace, e.g. ``term("csLewis")``."""
        return Iri(self.namespace + local)

    @property
    def classes(self) -> tuple[Iri, ...]:
        return tuple(self[s] for s in CLASS_NAMES)

    @property
    def properties(self) -> tuple[Iri, ...]:
        return tuple(self[s] for s in OBJECT_PROPERTY_NAMES + DATA_PROPERTY_NAMES)


RDN = Vocabulary()


class AxiomKind(enum.Enum):
    EXISTENTIAL_CONSTRAINT = "ExistentialConstraint"
    STRUCTURAL_TAUTOLOGY = "StructuralTautology"
    SCOPED_DOMAIN_RULE = "ScopedDomainRule"
    INVERSE_FUNCTIONAL_CONSTRAINT = "InverseFunctionalConstraint"
    SCOPED_RANGE_RULE = "ScopedRangeRule"
    GLOBAL_RANGE_RULE = "GlobalRangeRule"
    GLOBAL_DOMAIN_RULE = "GlobalDomainRule"
    DISJOINTNESS_CONSTRAINT = "DisjointnessConstraint"
    PROPERTY_CHAIN_RULE = "PropertyChainRule"

    def __str__(self) -> str:
        return self.value

    @property
    def is_rule(self) -> bool:
        return self.value.endswith("Rule")

    @property
    def is_constraint(self) -> bool:
        return self.value.endswith("Constraint")


@dataclass(frozen=True)
class Axiom:
    """One TBox statement.

    ``participants`` are pattern symbols in a kind-specific order:

    ============================  =========================================
    ExistentialConstraint         (C, property, filler)   C ⊑ ∃p.D
    StructuralTautology           (C, property, filler)   C ⊑ ≥0 p.D
    ScopedDomainRule              (property, filler, C)   ∃p.D ⊑ C
    InverseFunctionalConstraint   (C, property, filler)   C ⊑ ≤1 p⁻.D
    ScopedRangeRule               (C, property, filler)   C ⊑ ∀p.D
    GlobalRangeRule               (property, C)           ⊤ ⊑ ∀p.C
    GlobalDomainRule              (property, C)           ∃p.⊤ ⊑ C
    DisjointnessConstraint        (C, D)                  C ⊓ D ⊑ ⊥
    PropertyChainRule             (p, q, r)               p ∘ q ⊑ r
    ============================  =========================================

    ``inverted`` names chain links that are traversed backwards.
    """

    index: int
    kind: AxiomKind
    participants: tuple[str, ...]
    formula: str
    inverted: frozenset[str] = frozenset()

    @property
    def generates_rule(self) -> bool:
        return self.kind.is_rule

    @property
    def generates_constraint(self) -> bool:
        return self.kind.is_constraint


K = AxiomKind

_TBOX = (
    Axiom(1, K.EXISTENTIAL_CONSTRAINT, ("Agent", "hasName", "Name"), "Agent ⊑ ∃hasName.Name"),
    Axiom(2, K.STRUCTURAL_TAUTOLOGY, ("Agent", "assumesAgentRole", "AgentRole"),
          "Agent ⊑ ≥0 assumesAgentRole.AgentRole"),
    Axiom(3, K.SCOPED_DOMAIN_RULE, ("assumesAgentRole", "AgentRole", "Agent"),
          "∃assumesAgentRole.AgentRole ⊑ Agent"),
    Axiom(4, K.INVERSE_FUNCTIONAL_CONSTRAINT, ("AgentRole", "assumesAgentRole", "Agent"),
          "AgentRole ⊑ ≤1 assumesAgentRole⁻.Agent"),
    Axiom(5, K.SCOPED_RANGE_RULE, ("Agent", "assumesAgentRole", "AgentRole"),
          "Agent ⊑ ∀assumesAgentRole.AgentRole"),
    Axiom(6, K.STRUCTURAL_TAUTOLOGY, ("AgentRole", "hasRoleUnderName", "Name"),
          "AgentRole ⊑ ≥0 hasRoleUnderName.Name"),
    Axiom(7, K.GLOBAL_RANGE_RULE, ("hasRoleUnderName", "Name"), "⊤ ⊑ ∀hasRoleUnderName.Name"),
    Axiom(8, K.GLOBAL_RANGE_RULE, ("providesAgentRole", "AgentRole"),
          "⊤ ⊑ ∀providesAgentRole.AgentRole"),
    Axiom(9, K.INVERSE_FUNCTIONAL_CONSTRAINT, ("Name", "hasName", "Agent"),
          "Name ⊑ ≤1 hasName⁻.Agent"),
    Axiom(10, K.GLOBAL_RANGE_RULE, ("hasName", "Name"), "⊤ ⊑ ∀hasName.Name"),
    Axiom(11, K.GLOBAL_DOMAIN_RULE, ("hasNameAsString", "Name"), "∃hasNameAsString.⊤ ⊑ Name"),
    Axiom(12, K.DISJOINTNESS_CONSTRAINT, ("AgentRole", "Agent"), "AgentRole ⊓ Agent ⊑ ⊥"),
    Axiom(13, K.DISJOINTNESS_CONSTRAINT, ("Agent", "Name"), "Agent ⊓ Name ⊑ ⊥"),
    Axiom(14, K.DISJOINTNESS_CONSTRAINT, ("Name", "AgentRole"), "Name ⊓ AgentRole ⊑ ⊥"),
    Axiom(15, K.PROPERTY_CHAIN_RULE, ("assumesAgentRole", "hasRoleUnderName", "hasName"),
          "assumesAgentRole ∘ hasRoleUnderName ⊑ hasName"),
    Axiom(16, K.PROPERTY_CHAIN_RULE, ("hasName", "hasRoleUnderName", "assumesAgentRole"),
          "hasName ∘ hasRoleUnderName⁻ ⊑ assumesAgentRole", frozenset({"hasRoleUnderName"})),
)

del K


def tbox() -> tuple[Axiom, ...]:
    """All sixteen axioms in index order."""
    return _TBOX


def axiom(index: int) -> Axiom:
    """Look up an axiom by its 1-based index."""
    if not 1 <= index <= len(_TBOX):
        raise IndexError(f"no axiom with index {index}")
    return _TBOX[index - 1]


# -- OWL rendering -----------------------------------------------------------

_NNI = '"{}"^^xsd:nonNegativeInteger'


def _restriction(node: str, prop: str, lines: list[str], *, inverse: bool = False) -> None:
    if inverse:
        lines.append(f"{node} a owl:Restriction ;\n    owl:onProperty {node}_inv .")
        lines.append(f"{node}_inv owl:inverseOf :{prop} .")
    else:
        lines.append(f"{node} a owl:Restriction ;\n    owl:onProperty :{prop} .")


def _render_axiom(ax: Axiom) -> list[str]:
    node = f"_:ax{ax.index}"
    p = ax.participants
    kind = ax.kind
    out: list[str] = []
    if kind is AxiomKind.EXISTENTIAL_CONSTRAINT:
        out.append(f":{p[0]} rdfs:subClassOf {node} .")
        _restriction(node, p[1], out)
        out.append(f"{node} owl:someValuesFrom :{p[2]} .")
    elif kind is AxiomKind.STRUCTURAL_TAUTOLOGY:
        out.append(f":{p[0]} rdfs:subClassOf {node} .")
        _restriction(node, p[1], out)
        out.append(
            f"{node} owl:minQualifiedCardinality {_NNI.format(0)} ;\n    owl:onClass :{p[2]} ."
        )
    elif kind is AxiomKind.SCOPED_DOMAIN_RULE:
        _restriction(node, p[0], out)
        out.append(f"{node} owl:someValuesFrom :{p[1]} ;\n    rdfs:subClassOf :{p[2]} .")
    elif kind is AxiomKind.INVERSE_FUNCTIONAL_CONSTRAINT:
        out.append(f":{p[0]} rdfs:subClassOf {node} .")
        _restriction(node, p[1], out, inverse=True)
        out.append(
            f"{node} owl:maxQualifiedCardinality {_NNI.format(1)} ;\n    owl:onClass :{p[2]} ."
        )
    elif kind is AxiomKind.SCOPED_RANGE_RULE:
        out.append(f":{p[0]} rdfs:subClassOf {node} .")
        _restriction(node, p[1], out)
        out.append(f"{node} owl:allValuesFrom :{p[2]} .")
    elif kind is AxiomKind.GLOBAL_RANGE_RULE:
        out.append(f":{p[0]} rdfs:range :{p[1]} .")
    elif kind is AxiomKind.GLOBAL_DOMAIN_RULE:
        out.append(f":{p[0]} rdfs:domain :{p[1]} .")
    elif kind is AxiomKind.DISJOINTNESS_CONSTRAINT:
        out.append(f":{p[0]} owl:disjointWith :{p[1]} .")
    elif kind is AxiomKind.PROPERTY_CHAIN_RULE:
        first, second, sup = p
        second_ref = f"{node}_inv" if second in ax.inverted else f":{second}"
        out.append(f":{sup} owl:propertyChainAxiom {node}_l1 .")
        out.append(f"{node}_l1 rdf:first :{first} ;\n    rdf:rest {node}_l2 .")
        out.append(f"{node}_l2 rdf:first {second_ref} ;\n    rdf:rest rdf:nil .")
        if second in ax.inverted:
            out.append(f"{node}_inv owl:inverseOf :{second} .")
    else:  # pragma: no cover
        raise ValueError(f"cannot render axiom kind {kind}")
    return out


def tbox_turtle(vocab: Vocabulary = RDN) -> str:
    """The TBox as OWL 2 in Turtle, one commented block per axiom.

    RDF lists are spelled out with ``rdf:first``/``rdf:rest`` so the output
    stays inside the subset :func:`rdn.turtle.parse` accepts.
    """
    ontology = vocab.namespace.rstrip("#/")
    lines = [
        f"@prefix : <{vocab.namespace}> .",
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .",
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .",
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .",
        "",
        f"<{ontology}> a owl:Ontology .",
        "",
    ]
    lines += [f":{c} a owl:Class ." for c in CLASS_NAMES]
    lines += [f":{p} a owl:ObjectProperty ." for p in OBJECT_PROPERTY_NAMES]
    lines += [f":{p} a owl:DatatypeProperty ." for p in DATA_PROPERTY_NAMES]
    for ax in tbox():
        lines.append("")
        lines.append(f"# ({ax.index}) {ax.kind}: {ax.formula}")
        lines.extend(_render_axiom(ax))
    return "\n".join(lines) + "\n"

