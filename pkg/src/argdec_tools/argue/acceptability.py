"""Acceptability of arguments under inconsistent knowledge

Belief arguments ``<H, h>`` (minimal consistent proofs from K*) undercut
one another and attack PRO arguments by concluding the negation of a
support element or consequence. A node defends itself against an attacker
of no higher level; a set ``S`` defends a node when every attacker the node
cannot hold off alone is strongly undercut by a member of ``S``. The
acceptable arguments are the least fixpoint of that defence function.
Only the pessimistic criterion is covered.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field

from argdec_tools.argue.arguments import (
    ArgumentPro,
    Ranking,
    braces,
    enumerate_pro,
    rank_by,
    strength_pro,
    support_level,
)
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ScaleValue
from argdec_tools.logic.backend import INCONSISTENT, Backend, make_backend, subset_members
from argdec_tools.logic.formula import Formula, atoms_of, negate, to_text
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig, resolve

logger = logging.getLogger(__name__)

STATUS_CANDIDATE = "candidate"  # Some PRO argument is acceptable
STATUS_REJECTED = "rejected"  # Every PRO argument is rejected
STATUS_UNDECIDED = "undecided"  # Neither of the above


@dataclass(frozen=True)
class BeliefArgument:
    support: tuple[Formula, ...]
    conclusion: Formula

    def __str__(self) -> str:
        return f"<{braces(self.support)}, {to_text(self.conclusion)}>"


Node = BeliefArgument | ArgumentPro


def enumerate_belief_args(
    inst: Instance, relevant: Iterable[Formula], config: EngineConfig | None = None
) -> tuple[BeliefArgument, ...]:
    """Belief arguments with a minimal consistent support for each conclusion.

    Raises:
        EnumerationLimit: If the knowledge base exceeds the subset bound.
    """
    config = resolve(config)
    conclusions = list(dict.fromkeys(relevant))
    kb = inst.kb.formulas
    table = inst.backend(config).support_table(kb, (), conclusions, config.subset_limit)
    found = []
    for t, conclusion in enumerate(conclusions):
        for subset, entailed in enumerate(table):
            if entailed == INCONSISTENT or not entailed >> t & 1:
                continue
            if all(not table[subset ^ (1 << i)] >> t & 1 for i in subset_members(subset)):
                found.append(BeliefArgument(tuple(kb[i] for i in subset_members(subset)), conclusion))
    return tuple(found)


def undercuts(
    b1: BeliefArgument, b2: BeliefArgument, backend: Backend | None = None
) -> bool:
    """Whether ``b1`` concludes the negation of a support element of ``b2``."""
    backend = backend or _backend_for([b1, b2])
    return any(backend.equivalent(b1.conclusion, negate(h)) for h in b2.support)


def attacks(b: BeliefArgument, p: ArgumentPro, backend: Backend | None = None) -> bool:
    """Whether ``b`` concludes the negation of a support element or consequence of ``p``."""
    backend = backend or _backend_for([b, p])
    return any(
        backend.equivalent(b.conclusion, negate(h)) for h in (*p.support, *p.consequences)
    )


def _backend_for(nodes: Iterable[Node]) -> Backend:
    phis = []
    for node in nodes:
        phis += node.support
        phis += [node.conclusion] if isinstance(node, BeliefArgument) else node.consequences
    return make_backend(atoms_of(phis))


def node_level(node: Node, inst: Instance) -> ScaleValue:
    """Support certainty of a belief argument, Level_P of a PRO argument."""
    return support_level(node.support, inst)


def defends_itself(target: Node, attacker: BeliefArgument, inst: Instance) -> bool:
    return node_level(target, inst) >= node_level(attacker, inst)


@dataclass(frozen=True)
class ArgGraph:
    """Belief and PRO arguments with undercut and attack edges."""

    nodes: tuple[Node, ...]
    edges: frozenset[tuple[BeliefArgument, Node]]
    levels: dict[Node, ScaleValue] = field(compare=False, hash=False)

    def attackers(self, node: Node) -> list[BeliefArgument]:
        return [source for source, target in self.edges if target == node]

    @property
    def beliefs(self) -> tuple[BeliefArgument, ...]:
        return tuple(n for n in self.nodes if isinstance(n, BeliefArgument))

    @property
    def pros(self) -> tuple[ArgumentPro, ...]:
        return tuple(n for n in self.nodes if isinstance(n, ArgumentPro))


def build_graph(inst: Instance, config: EngineConfig | None = None) -> ArgGraph:
    """PRO arguments of every decision, belief arguments closed under relevance, and edges.

    Belief conclusions are the negations of every formula used by a PRO
    argument, then of every support element of the belief arguments found
    so far, until nothing new appears.
    """
    config = resolve(config)
    backend = inst.backend(config)
    pros = [a for d in inst.decisions for a in enumerate_pro(inst, d, config)]

    relevant: dict[Formula, None] = {}
    for a in pros:
        relevant.update((negate(h), None) for h in (*a.support, *a.consequences))
    while True:
        beliefs = enumerate_belief_args(inst, relevant, config)
        fresh = {negate(h) for b in beliefs for h in b.support} - relevant.keys()
        if not fresh:
            break
        relevant.update((phi, None) for phi in sorted(fresh, key=to_text))

    nodes: tuple[Node, ...] = (*beliefs, *pros)
    edges = set()
    for b in beliefs:
        for target in nodes:
            if isinstance(target, BeliefArgument):
                hit = undercuts(b, target, backend)
            else:
                hit = attacks(b, target, backend)
            if hit:
                edges.add((b, target))
    levels = {node: node_level(node, inst) for node in nodes}
    logger.debug(
        "argument graph: %d belief, %d PRO arguments, %d edges", len(beliefs), len(pros), len(edges)
    )
    return ArgGraph(nodes, frozenset(edges), levels)


# ── Fixpoint ──


def _incoming(graph: ArgGraph) -> dict[Node, list[BeliefArgument]]:
    incoming = defaultdict(list)
    for source, target in graph.edges:
        incoming[target].append(source)
    return incoming


def defended_by(graph: ArgGraph, defenders: frozenset[Node]) -> frozenset[Node]:
    """Nodes whose every attacker is either held off by the node itself or
    strongly undercut by a member of ``defenders``."""
    incoming = _incoming(graph)
    levels = graph.levels
    result = set()
    for node in graph.nodes:
        for attacker in incoming[node]:
            if levels[node] >= levels[attacker]:
                continue
            if not any(
                c in defenders and levels[c] > levels[attacker] for c in incoming[attacker]
            ):
                break
        else:
            result.add(node)
    return frozenset(result)


def initial_set(graph: ArgGraph) -> frozenset[Node]:
    """Nodes with no attacker they cannot defend themselves against."""
    return defended_by(graph, frozenset())


def _iterate(graph: ArgGraph, start: frozenset[Node]) -> tuple[frozenset[Node], int]:
    current, rounds = start, 0
    while True:
        following = defended_by(graph, current)
        rounds += 1
        if following == current:
            return current, rounds
        current = following


def least_fixpoint(graph: ArgGraph) -> frozenset[Node]:
    """Least fixpoint of :func:`defended_by` iterated from the empty set."""
    return _iterate(graph, frozenset())[0]


@dataclass(frozen=True)
class AcceptabilityResult:
    graph: ArgGraph
    initial: frozenset[Node]
    acceptable: frozenset[Node]
    rejected: frozenset[Node]
    abeyance: frozenset[Node]
    status: dict[Decision, str]
    scores: dict[Decision, ScaleValue]
    alternative_scores: dict[Decision, ScaleValue]
    iterations: int


def acceptable_fixpoint(graph: ArgGraph, inst: Instance) -> AcceptabilityResult:
    """Classify every node and every decision.

    The iteration starts from the initial set; it must reach the least
    fixpoint within as many rounds as there are nodes.

    Returns:
        AcceptabilityResult: Acceptable, rejected and abeyance classes,
        decision statuses, and the best min(Level_P, Weight_P) per decision
        over its acceptable PRO arguments (``scores``) and over all of them
        (``alternative_scores``).
    """
    initial = initial_set(graph)
    acceptable, iterations = _iterate(graph, initial)
    assert iterations <= max(len(graph.nodes), 1), "fixpoint iteration exceeded node count"
    assert acceptable == least_fixpoint(graph), "fixpoint differs from the least fixpoint"

    incoming = _incoming(graph)
    rejected = frozenset(
        node
        for node in graph.nodes
        if node not in acceptable
        and any(
            a in acceptable and graph.levels[node] < graph.levels[a] for a in incoming[node]
        )
    )
    abeyance = frozenset(graph.nodes) - acceptable - rejected

    status, scores, alternative = {}, {}, {}
    for d in inst.decisions:
        pros = [a for a in graph.pros if a.decision == d]
        if any(a in acceptable for a in pros):
            status[d] = STATUS_CANDIDATE
        elif all(a in rejected for a in pros):
            status[d] = STATUS_REJECTED
        else:
            status[d] = STATUS_UNDECIDED
        values = {a: strength_pro(a, inst).value for a in pros}
        accepted = [v for a, v in values.items() if a in acceptable]
        if accepted:
            scores[d] = max(accepted)
        if values:
            alternative[d] = max(values.values())
    logger.debug(
        "acceptability fixpoint after %d rounds: %d acceptable, %d rejected, %d in abeyance",
        iterations,
        len(acceptable),
        len(rejected),
        len(abeyance),
    )
    return AcceptabilityResult(
        graph, initial, acceptable, rejected, abeyance, status, scores, alternative, iterations
    )


def rank_candidates(result: AcceptabilityResult, inst: Instance) -> Ranking:
    """Candidate decisions by descending score; the others are left unranked."""
    candidates = [d for d in inst.decisions if result.status[d] == STATUS_CANDIDATE]
    others = tuple(d for d in inst.decisions if result.status[d] != STATUS_CANDIDATE)
    scores = {d: result.scores[d] for d in candidates}
    return Ranking(rank_by(candidates, scores), scores, others)
