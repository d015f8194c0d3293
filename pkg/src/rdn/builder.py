"""Construct conforming instance data one agent at a time."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph
from .terms import RDF_TYPE, Iri, Literal, TermError, Triple
from .vocab import RDN, Vocabulary


class BuilderError(ValueError):
    pass


IriLike = Union[Iri, str]


def _iri(value: IriLike, what: str) -> Iri:
    if isinstance(value, Iri):
        return value
    try:
        return Iri(value)
    except TermError as exc:
        raise BuilderError(f"{what}: {exc}") from None


@dataclass(frozen=True)
class RoleRecord:
    role: Iri
    provider: Optional[Iri] = None
    under_name: Optional[Iri] = None


@dataclass
class AgentBuilder:
    """Names and roles of a single agent.

    Every role's ``under_name`` must refer to a name already added here, and
    name and role identifiers must be unique and differ from the agent's.
    Rendering needs at least one name, since every agent must have one.
    Methods return the builder so calls can be chained.
    """

    agent_id: Iri
    vocab: Vocabulary = RDN
    names: list[tuple[Iri, str]] = field(default_factory=list)
    roles: list[RoleRecord] = field(default_factory=list)

    def _used(self) -> set[Iri]:
        return {self.agent_id} | {n for n, _ in self.names} | {r.role for r in self.roles}

    def with_name(self, name_id: IriLike, name_string: str) -> "AgentBuilder":
        name_id = _iri(name_id, "name id")
        if not isinstance(name_string, str):
            raise BuilderError("name string must be a str")
        if name_id in self._used():
            raise BuilderError(f"identifier {name_id} is already used in this builder")
        self.names.append((name_id, name_string))
        return self

    def with_role(
        self,
        role_id: IriLike,
        provider: Optional[IriLike] = None,
        under_name: Optional[IriLike] = None,
    ) -> "AgentBuilder":
        role_id = _iri(role_id, "role id")
        if role_id in self._used():
            raise BuilderError(f"identifier {role_id} is already used in this builder")
        if provider is not None:
            provider = _iri(provider, "provider")
        if under_name is not None:
            under_name = _iri(under_name, "under-name")
            if under_name not in {n for n, _ in self.names}:
                raise BuilderError(
                    f"role {role_id} refers to name {under_name}, which was not added"
                )
        self.roles.append(RoleRecord(role_id, provider, under_name))
        return self

    def triples(self) -> set[Triple]:
        if not self.names:
            raise BuilderError(f"agent {self.agent_id} has no name")
        v = self.vocab
        a = self.agent_id
        out = {Triple(a, RDF_TYPE, v.Agent)}
        for name_id, text in self.names:
            out.add(Triple(a, v.hasName, name_id))
            out.add(Triple(name_id, v.hasNameAsString, Literal(text)))
            out.add(Triple(name_id, RDF_TYPE, v.Name))
        for r in self.roles:
            out.add(Triple(a, v.assumesAgentRole, r.role))
            out.add(Triple(r.role, RDF_TYPE, v.AgentRole))
            if r.provider is not None:
                out.add(Triple(r.provider, v.providesAgentRole, r.role))
            if r.under_name is not None:
                out.add(Triple(r.role, v.hasRoleUnderName, r.under_name))
        return out

    def to_graph(self, base: Optional[Graph] = None) -> Graph:
        """Render to a graph, optionally unioned into ``base``."""
        if base is None:
            return Graph(self.triples())
        return base.union(self.triples())


def agent(agent_id: IriLike, vocab: Vocabulary = RDN) -> AgentBuilder:
    return AgentBuilder(_iri(agent_id, "agent id"), vocab)


def to_graph(*builders: AgentBuilder) -> Graph:
    """Union of several builders' output (one builder per agent)."""
    triples: set[Triple] = set()
    for b in builders:
        triples |= b.triples()
    return Graph(triples)
