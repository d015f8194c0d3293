"""The C. S. Lewis worked example, as Turtle and as graphs."""

from __future__ import annotations

from .graph import DEFAULT_NAMESPACE, Graph
from .terms import Term
from .turtle import parse
from .vocab import RDN, Vocabulary

# Roles and names joined without the role-to-name link: nothing says which
# pseudonym went with which book.
LEWIS_NAIVE_TTL = """\
:spiritInBondage :providesAgentRole :sibAuthorRole .
:griefObserved   :providesAgentRole :goAuthorRole .
:csLewis         :assumesAgentRole  :sibAuthorRole ,
                                    :goAuthorRole ;
                 :hasName           :csLewisNameCV ,
                                    :csLewisNameNWC ,
                                    :csLewisNameCSL .
:csLewisNameNWC  :hasNameAsString   "N. W. Clerk"^^xsd:string .
:csLewisNameCV   :hasNameAsString   "Clive Hamilton"^^xsd:string .
:csLewisNameCSL  :hasNameAsString   "C. S. Lewis"^^xsd:string .
"""

LEWIS_ROLE_NAMES_TTL = """\
:sibAuthorRole  :hasRoleUnderName  :csLewisNameCV .
:goAuthorRole   :hasRoleUnderName  :csLewisNameNWC .
"""

LEWIS_FULL_TTL = LEWIS_NAIVE_TTL + LEWIS_ROLE_NAMES_TTL


def lewis_naive(base: str = DEFAULT_NAMESPACE) -> Graph:
    return parse(LEWIS_NAIVE_TTL, base)


def lewis_full(base: str = DEFAULT_NAMESPACE) -> Graph:
    return parse(LEWIS_FULL_TTL, base)


def lewis_builder(vocab: Vocabulary = RDN):
    from .builder import agent

    t = vocab.term
    return (
        agent(t("csLewis"), vocab)
        .with_name(t("csLewisNameCV"), "Clive Hamilton")
        .with_name(t("csLewisNameNWC"), "N. W. Clerk")
        .with_name(t("csLewisNameCSL"), "C. S. Lewis")
        .with_role(t("sibAuthorRole"), provider=t("spiritInBondage"), under_name=t("csLewisNameCV"))
        .with_role(t("goAuthorRole"), provider=t("griefObserved"), under_name=t("csLewisNameNWC"))
    )


def names_under_role(graph: Graph, role: Term, vocab: Vocabulary = RDN) -> set[Term]:
    """Names a role is explicitly assumed under; empty means the graph cannot say."""
    return {t.object for t in graph.match(role, vocab.hasRoleUnderName, None)}


def candidate_names(graph: Graph, role: Term, vocab: Vocabulary = RDN) -> set[Term]:
    """Names the role could have been assumed under.

    The linked name when there is one, otherwise every name of every agent
    assuming the role.
    """
    linked = names_under_role(graph, role, vocab)
    if linked:
        return linked
    out: set[Term] = set()
    for t in graph.match(None, vocab.assumesAgentRole, role):
        out |= {n.object for n in graph.match(t.subject, vocab.hasName, None)}
    return out


__all__ = [
    "LEWIS_FULL_TTL",
    "LEWIS_NAIVE_TTL",
    "LEWIS_ROLE_NAMES_TTL",
    "candidate_names",
    "lewis_builder",
    "lewis_full",
    "lewis_naive",
    "names_under_role",
]
