"""Role-Dependent Names ontology pattern: parse, materialize, validate, build."""

__version__ = "0.1.0"

from .builder import AgentBuilder, BuilderError, agent
from .engine import (
    DerivationTrace,
    ProofNode,
    Rule,
    Status,
    compile_rules,
    explain,
    materialize,
    step,
)
from .graph import DEFAULT_NAMESPACE, Graph, UnknownPrefixError, equal, expand
from .terms import RDF_TYPE, BlankNode, Iri, Literal, TermError, Triple, TriplePattern
from .turtle import ParseError, ParseErrorKind, parse, serialize
from .validator import Violation, ViolationReport, check, constraints
from .vocab import RDN, Axiom, AxiomKind, Vocabulary, axiom, tbox

__all__ = [
    "AgentBuilder",
    "Axiom",
    "AxiomKind",
    "BlankNode",
    "BuilderError",
    "DEFAULT_NAMESPACE",
    "DerivationTrace",
    "Graph",
    "Iri",
    "Literal",
    "ParseError",
    "ParseErrorKind",
    "ProofNode",
    "RDF_TYPE",
    "RDN",
    "Rule",
    "Status",
    "TermError",
    "Triple",
    "TriplePattern",
    "UnknownPrefixError",
    "Violation",
    "ViolationReport",
    "Vocabulary",
    "agent",
    "axiom",
    "check",
    "compile_rules",
    "constraints",
    "equal",
    "expand",
    "explain",
    "materialize",
    "parse",
    "serialize",
    "step",
    "tbox",
]
