"""Arguments for and against decisions

A PRO argument ``<S, C, d>`` is a consistent knowledge support ``S`` that,
together with decision ``d``, entails exactly the goals ``C``; ``S`` is
inclusion-minimal for that closure. A CON argument is the same with the
goals whose negation is entailed. Strengths and weaknesses give
argument-based pessimistic and optimistic utilities equal to the ones
obtained by level cuts.

Every subset enumeration goes through ``Backend.support_table``, which
reports the entailed goal set of every support in one pass. A support is
minimal for its closure exactly when removing any single element shrinks
the closure, because entailment is monotone.
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from argdec_tools.bases.base import with_decision
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ONE, ZERO, ScaleValue, order_reverse
from argdec_tools.logic.backend import INCONSISTENT, subset_members
from argdec_tools.logic.formula import Formula, negate, to_text
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig, resolve

logger = logging.getLogger(__name__)


def braces(phis: Iterable[Formula]) -> str:
    return "{" + ", ".join(to_text(phi) for phi in phis) + "}"


@dataclass(frozen=True)
class ArgumentPro:
    support: tuple[Formula, ...]
    consequences: tuple[Formula, ...]
    decision: Decision

    def __str__(self) -> str:
        return f"<{braces(self.support)}, {braces(self.consequences)}, {self.decision}>"


@dataclass(frozen=True)
class ArgumentCon:
    support: tuple[Formula, ...]
    consequences: tuple[Formula, ...]
    decision: Decision

    def __str__(self) -> str:
        return f"<{braces(self.support)}, {braces(self.consequences)}, {self.decision}>"


@dataclass(frozen=True)
class StrengthPro:
    level: ScaleValue
    weight: ScaleValue

    @property
    def value(self) -> ScaleValue:
        return min(self.level, self.weight)


@dataclass(frozen=True)
class WeaknessCon:
    level: ScaleValue
    weight: ScaleValue

    @property
    def value(self) -> ScaleValue:
        return max(self.level, self.weight)


@dataclass(frozen=True)
class Conflict:
    """A minimal inconsistent subset of ``K_d* ∪ G*``, split by origin."""

    knowledge: tuple[Formula, ...]
    goals: tuple[Formula, ...]


@dataclass(frozen=True)
class Ranking:
    """Ordered partition of decisions, best group first.

    Groups keep declaration order inside; ``unranked`` holds the decisions
    left out (infeasible ones, or non-candidates under acceptability).
    """

    groups: tuple[tuple[Decision, ...], ...]
    scores: dict[Decision, ScaleValue] = field(default_factory=dict, compare=False)
    unranked: tuple[Decision, ...] = ()

    def texts(self) -> list[list[str]]:
        return [[d.text() for d in group] for group in self.groups]

    def restricted(self, keep: Iterable[Decision]) -> "Ranking":
        """The same ranking with only the decisions of ``keep``."""
        keep = set(keep)
        groups = tuple(
            kept for group in self.groups if (kept := tuple(d for d in group if d in keep))
        )
        return Ranking(groups, {d: v for d, v in self.scores.items() if d in keep})


def rank_by(decisions: Sequence[Decision], scores: dict[Decision, ScaleValue]) -> tuple:
    """Group ``decisions`` by descending score, ties in declaration order."""
    groups = []
    for value in sorted({scores[d] for d in decisions}, reverse=True):
        groups.append(tuple(d for d in decisions if scores[d] == value))
    return tuple(groups)


# ── Enumeration ──


def _pick(formulas: Sequence[Formula], mask: int) -> tuple[Formula, ...]:
    return tuple(formulas[i] for i in subset_members(mask))


def _minimal_closures(
    inst: Instance, d: Decision, targets: Sequence[Formula], config: EngineConfig | None
) -> list[tuple[int, int]]:
    config = resolve(config)
    table = inst.backend(config).support_table(
        inst.kb.formulas, d.formulas(), targets, config.subset_limit
    )
    found = []
    for subset, closure in enumerate(table):
        if closure == INCONSISTENT:
            continue
        if all(table[subset ^ (1 << i)] != closure for i in subset_members(subset)):
            found.append((subset, closure))
    return found


def enumerate_pro(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> tuple[ArgumentPro, ...]:
    """Every PRO argument for ``d``: one per minimal support of each closure.

    The empty argument ``<{}, C({}), d>`` is always included when ``d`` alone
    is consistent.

    Raises:
        EnumerationLimit: If the knowledge base exceeds the subset bound.
    """
    kb, goals = inst.kb.formulas, inst.goals.formulas
    arguments = tuple(
        ArgumentPro(_pick(kb, subset), _pick(goals, closure), d)
        for subset, closure in _minimal_closures(inst, d, goals, config)
    )
    logger.debug("%d PRO arguments for %s", len(arguments), d)
    return arguments


def enumerate_con(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> tuple[ArgumentCon, ...]:
    """Every CON argument against ``d``; empty when no goal's negation follows.

    Raises:
        EnumerationLimit: If the knowledge base exceeds the subset bound.
    """
    kb, goals = inst.kb.formulas, inst.goals.formulas
    negated = [negate(g) for g in goals]
    arguments = tuple(
        ArgumentCon(_pick(kb, subset), _pick(goals, closure), d)
        for subset, closure in _minimal_closures(inst, d, negated, config)
        if closure
    )
    logger.debug("%d CON arguments against %s", len(arguments), d)
    return arguments


# ── Strength and Preference ──


def support_level(support: Iterable[Formula], inst: Instance) -> ScaleValue:
    """Minimal knowledge weight over ``support``; 1 for an empty support."""
    return min((inst.kb.weight_of(phi) for phi in support), default=ONE)


def strength_pro(a: ArgumentPro, inst: Instance) -> StrengthPro:
    """Level is the support certainty; weight is ``n`` of the highest
    priority among the goals the argument leaves unsatisfied (1 when it
    covers every goal)."""
    missed = [e.weight for e in inst.goals if e.formula not in a.consequences]
    return StrengthPro(support_level(a.support, inst), order_reverse(max(missed, default=ZERO)))


def weakness_con(a: ArgumentCon, inst: Instance) -> WeaknessCon:
    """Level is ``n`` of the support certainty (0 for an empty support);
    weight is ``n`` of the highest priority the argument violates."""
    level = order_reverse(support_level(a.support, inst))
    violated = max(e.weight for e in inst.goals if e.formula in a.consequences)
    return WeaknessCon(level, order_reverse(violated))


def prefer_pro(a: ArgumentPro, b: ArgumentPro, inst: Instance) -> bool:
    """``a`` is at least as strong as ``b``: min(level, weight) compared."""
    return strength_pro(a, inst).value >= strength_pro(b, inst).value


def prefer_con(a: ArgumentCon, b: ArgumentCon, inst: Instance) -> bool:
    """``a`` is at least as weak as ``b``: max(level, weight) compared, higher preferred."""
    return weakness_con(a, inst).value >= weakness_con(b, inst).value


def undominated(arguments: Sequence[ArgumentPro | ArgumentCon], inst: Instance) -> list:
    """Arguments no other argument beats on level, weight and coverage.

    A PRO argument is dominated by one with level and weight at least as
    high and a superset of consequences; a CON argument by one with level
    and weight at most as high (a harder blow) and a superset of
    consequences. At least one comparison must be strict.
    """

    def key(a):
        if isinstance(a, ArgumentPro):
            s = strength_pro(a, inst)
            return s.level, s.weight
        w = weakness_con(a, inst)
        return -w.level, -w.weight

    def dominates(x, y) -> bool:
        (xl, xw), (yl, yw) = key(x), key(y)
        covers = set(x.consequences) >= set(y.consequences)
        if not (xl >= yl and xw >= yw and covers):
            return False
        return xl > yl or xw > yw or set(x.consequences) > set(y.consequences)

    return [a for a in arguments if not any(dominates(b, a) for b in arguments if b is not a)]


# ── Argument-Based Utilities ──


def pessimistic_args(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """Best min(level, weight) over the PRO arguments for ``d``.

    Raises:
        NotNormalized: If K* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
        EnumerationLimit: If the knowledge base exceeds the subset bound.
    """
    inst.require_feasible(d, config, goals=False)
    return max(strength_pro(a, inst).value for a in enumerate_pro(inst, d, config))


def optimistic_args(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """Lowest max(level, weight) over the CON arguments against ``d``; 1
    when there is none. The strongest counterargument caps optimism.

    Raises:
        NotNormalized: If K* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
        EnumerationLimit: If the knowledge base exceeds the subset bound.
    """
    inst.require_feasible(d, config, goals=False)
    return min((weakness_con(a, inst).value for a in enumerate_con(inst, d, config)), default=ONE)


def literal_optimistic_args(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """Optimistic score taking the preferred (highest) weakness instead of the lowest."""
    inst.require_feasible(d, config, goals=False)
    return max((weakness_con(a, inst).value for a in enumerate_con(inst, d, config)), default=ONE)


def _rank(
    inst: Instance,
    score: Callable[[Instance, Decision, EngineConfig | None], ScaleValue],
    config: EngineConfig | None,
) -> Ranking:
    feasible = [d for d in inst.decisions if inst.feasible(d, config)]
    infeasible = tuple(d for d in inst.decisions if d not in feasible)
    scores = {d: score(inst, d, config) for d in feasible}
    return Ranking(rank_by(feasible, scores), scores, infeasible)


def rank_pessimistic(inst: Instance, config: EngineConfig | None = None) -> Ranking:
    """Feasible decisions by descending :func:`pessimistic_args`.

    Raises:
        NotNormalized: If K* is inconsistent.
    """
    inst.require_normalized(config, goals=False)
    return _rank(inst, pessimistic_args, config)


def rank_optimistic(inst: Instance, config: EngineConfig | None = None) -> Ranking:
    """Feasible decisions by descending :func:`optimistic_args`."""
    inst.require_normalized(config, goals=False)
    return _rank(inst, optimistic_args, config)


def literal_optimistic_ranking(inst: Instance, config: EngineConfig | None = None) -> Ranking:
    """Ranking under :func:`literal_optimistic_args`, reported when it differs."""
    inst.require_normalized(config, goals=False)
    return _rank(inst, literal_optimistic_args, config)


# ── Conflicts ──


def minimal_conflicts(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> list[Conflict]:
    """Minimal inconsistent subsets of ``K_d* ∪ G*`` by brute force.

    Raises:
        EnumerationLimit: If ``K_d*`` and ``G*`` together exceed the conflict bound.
    """
    config = resolve(config)
    knowledge = with_decision(inst.kb, d).formulas
    items = [*knowledge, *inst.goals.formulas]
    table = inst.backend(config).support_table(items, limit=config.conflict_limit)
    split = (1 << len(knowledge)) - 1
    conflicts = []
    for subset, closure in enumerate(table):
        if closure != INCONSISTENT:
            continue
        if all(table[subset ^ (1 << i)] != INCONSISTENT for i in subset_members(subset)):
            conflicts.append(
                Conflict(_pick(knowledge, subset & split), _pick(items, subset & ~split))
            )
    return conflicts


def has_multi_goal_conflict(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> bool:
    """Whether some minimal conflict needs two or more goals jointly."""
    return any(len(c.goals) > 1 for c in minimal_conflicts(inst, d, config))
