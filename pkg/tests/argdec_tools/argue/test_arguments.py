from dataclasses import replace
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from argdec_tools.argue.arguments import (
    ArgumentCon,
    ArgumentPro,
    Conflict,
    StrengthPro,
    WeaknessCon,
    enumerate_con,
    enumerate_pro,
    has_multi_goal_conflict,
    literal_optimistic_args,
    minimal_conflicts,
    optimistic_args,
    pessimistic_args,
    prefer_con,
    prefer_pro,
    rank_optimistic,
    rank_pessimistic,
    strength_pro,
    undominated,
    weakness_con,
)
from argdec_tools.bases.base import GoalBase, KnowledgeBase
from argdec_tools.bases.instance import load_instance
from argdec_tools.bases.scale import ONE, ZERO
from argdec_tools.errors import EnumerationLimit, InfeasibleDecision, NotNormalized
from argdec_tools.generate.generator import GenConfig, generate_many
from argdec_tools.logic.backend import make_backend
from argdec_tools.logic.parser import parse_formula
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig
from tests.fixtures import INFEASIBLE, TWO_THREATS, UMBRELLA_WEIGHTS, umbrella_text

P = parse_formula


def _closure(inst, d, support):
    backend = make_backend(inst.atom_names)
    premises = [*support, *d.formulas()]
    return {g for g in inst.goals.formulas if backend.entails(premises, g)}


def test_umbrella_pro_arguments(umbrella, take, leave):
    assert set(enumerate_pro(umbrella, take)) == {
        ArgumentPro((), (), take),
        ArgumentPro((P("u -> ~w"),), (P("~w"),), take),
    }
    assert set(enumerate_pro(umbrella, leave)) == {
        ArgumentPro((), (), leave),
        ArgumentPro((P("~u -> ~l"),), (P("~l"),), leave),
    }


def test_umbrella_con_arguments(umbrella, take, leave):
    assert enumerate_con(umbrella, take) == (ArgumentCon((P("u -> l"),), (P("~l"),), take),)
    (against,) = enumerate_con(umbrella, leave)
    assert set(against.support) == {P("r & ~u -> w"), P("c"), P("c -> r")}
    assert against.consequences == (P("~w"),)


def test_umbrella_strengths(umbrella, take, leave):
    strengths = {a.support: strength_pro(a, umbrella) for a in enumerate_pro(umbrella, take)}
    assert strengths[()] == StrengthPro(ONE, ZERO)
    assert strengths[(P("u -> ~w"),)] == StrengthPro(ONE, Fraction(3, 5))
    (weak,) = enumerate_con(umbrella, take)
    assert weakness_con(weak, umbrella) == WeaknessCon(ZERO, Fraction(3, 5))
    (blow,) = enumerate_con(umbrella, leave)
    assert weakness_con(blow, umbrella) == WeaknessCon(Fraction(2, 5), ZERO)


def test_umbrella_utilities(umbrella, take, leave):
    assert pessimistic_args(umbrella, take) == Fraction(3, 5)
    assert optimistic_args(umbrella, take) == Fraction(3, 5)
    assert pessimistic_args(umbrella, leave) == ZERO
    assert optimistic_args(umbrella, leave) == Fraction(2, 5)


def test_umbrella_rankings(umbrella):
    assert rank_pessimistic(umbrella).texts() == [["u"], ["~u"]]
    assert rank_optimistic(umbrella).texts() == [["u"], ["~u"]]


@pytest.mark.parametrize("lam,sigma", UMBRELLA_WEIGHTS)
def test_umbrella_arguments_follow_the_weights(lam, sigma, take, leave):
    inst = load_instance(umbrella_text(lam, sigma))
    lam, sigma = Fraction(lam), Fraction(sigma)
    assert pessimistic_args(inst, take) == 1 - sigma
    assert optimistic_args(inst, take) == 1 - sigma
    assert pessimistic_args(inst, leave) == ZERO
    assert optimistic_args(inst, leave) == 1 - lam


def test_rankings_split_when_rain_is_unlikely_and_overload_matters():
    inst = load_instance(umbrella_text("1/5", "9/10"))
    pessimistic, optimistic = rank_pessimistic(inst), rank_optimistic(inst)
    assert pessimistic.texts() == [["u"], ["~u"]]
    assert optimistic.texts() == [["~u"], ["u"]]
    assert optimistic.scores == {Decision.of("u"): Fraction(1, 10), Decision.of("~u"): Fraction(4, 5)}


def test_ties_share_a_group():
    inst = load_instance(umbrella_text("1", "1"))
    assert rank_pessimistic(inst).texts() == [["u", "~u"]]


def test_arguments_are_minimal(umbrella):
    for d in umbrella.decisions:
        for a in enumerate_pro(umbrella, d):
            closure = _closure(umbrella, d, a.support)
            assert closure == set(a.consequences)
            for i in range(len(a.support)):
                smaller = a.support[:i] + a.support[i + 1 :]
                assert _closure(umbrella, d, smaller) != closure


def test_preferences_are_total_preorders(umbrella):
    pros = [a for d in umbrella.decisions for a in enumerate_pro(umbrella, d)]
    for a, b in product(pros, repeat=2):
        assert prefer_pro(a, b, umbrella) or prefer_pro(b, a, umbrella)
        for c in pros:
            if prefer_pro(a, b, umbrella) and prefer_pro(b, c, umbrella):
                assert prefer_pro(a, c, umbrella)
    cons = [a for d in umbrella.decisions for a in enumerate_con(umbrella, d)]
    for a, b in product(cons, repeat=2):
        assert prefer_con(a, b, umbrella) or prefer_con(b, a, umbrella)


def _scored(inst, d):
    pros = {
        (frozenset(a.support), frozenset(a.consequences), strength_pro(a, inst))
        for a in enumerate_pro(inst, d)
    }
    cons = {
        (frozenset(a.support), frozenset(a.consequences), weakness_con(a, inst))
        for a in enumerate_con(inst, d)
    }
    return pros, cons


def test_strengths_ignore_base_order():
    rng = np.random.default_rng(5)
    cfg = GenConfig(
        state_atoms=4,
        decision_atoms=2,
        kb_entries=6,
        goal_entries=3,
        decisions=3,
        seed=500,
        require_consistent_k=True,
        require_consistent_g=True,
    )
    for inst in generate_many(cfg, 10):
        kb, goals = inst.kb.entries, inst.goals.entries
        shuffled = replace(
            inst,
            kb=KnowledgeBase(tuple(kb[i] for i in rng.permutation(len(kb)))),
            goals=GoalBase(tuple(goals[i] for i in rng.permutation(len(goals)))),
        )
        for d in inst.decisions:
            if inst.feasible(d):
                assert _scored(shuffled, d) == _scored(inst, d)
                assert pessimistic_args(shuffled, d) == pessimistic_args(inst, d)
                assert optimistic_args(shuffled, d) == optimistic_args(inst, d)


def test_undominated(umbrella, take):
    assert undominated(enumerate_pro(umbrella, take), umbrella) == [
        ArgumentPro((P("u -> ~w"),), (P("~w"),), take)
    ]
    inst = load_instance(TWO_THREATS)
    kept = undominated(enumerate_con(inst, Decision.of("d")), inst)
    assert [a.consequences for a in kept] == [(P("g1"),), (P("g1"), P("g2"))]


def test_literal_optimistic_takes_the_highest_weakness():
    inst = load_instance(TWO_THREATS)
    d = Decision.of("d")
    assert optimistic_args(inst, d) == ZERO
    assert literal_optimistic_args(inst, d) == Fraction(1, 2)
    assert optimistic_args(inst, Decision.of("~d")) == ONE


def test_multi_goal(multi_goal):
    d, nd = Decision.of("d"), Decision.of("~d")
    assert optimistic_args(multi_goal, d) == ONE
    assert pessimistic_args(multi_goal, d) == Fraction(1, 2)
    assert has_multi_goal_conflict(multi_goal, d)
    assert not has_multi_goal_conflict(multi_goal, nd)
    assert minimal_conflicts(multi_goal, d) == [
        Conflict((P("d -> ~g1 | ~g2"), P("d")), (P("g1"), P("g2")))
    ]


def test_umbrella_conflicts(umbrella, take, leave):
    # ~l forces ~u by contraposition, then rain gets the suit wet
    wet = Conflict(
        (P("u -> l"), P("r & ~u -> w"), P("c"), P("c -> r")),
        (P("~w"), P("~l")),
    )
    assert minimal_conflicts(umbrella, take) == [
        Conflict((P("u -> l"), P("u")), (P("~l"),)),
        wet,
    ]
    assert minimal_conflicts(umbrella, leave) == [
        Conflict((P("r & ~u -> w"), P("c"), P("c -> r"), P("~u")), (P("~w"),)),
        wet,
    ]
    assert has_multi_goal_conflict(umbrella, take)
    assert has_multi_goal_conflict(umbrella, leave)


def test_single_goal_conflicts():
    inst = load_instance(TWO_THREATS)
    d = Decision.of("d")
    assert minimal_conflicts(inst, d) == [
        Conflict((P("d -> ~g1"), P("d")), (P("g1"),)),
        Conflict((P("d -> ~g2"), P("d")), (P("g2"),)),
    ]
    assert not has_multi_goal_conflict(inst, d)


def test_preconditions(conflict):
    with pytest.raises(NotNormalized):
        pessimistic_args(conflict, Decision.of("d"))
    with pytest.raises(NotNormalized):
        rank_optimistic(conflict)
    infeasible = load_instance(INFEASIBLE)
    with pytest.raises(InfeasibleDecision):
        optimistic_args(infeasible, Decision.of("d"))


def test_infeasible_decisions_are_unranked():
    ranking = rank_pessimistic(load_instance(INFEASIBLE))
    assert ranking.groups == ()
    assert ranking.unranked == (Decision.of("d"),)


def test_subset_bound(umbrella, take):
    with pytest.raises(EnumerationLimit):
        enumerate_pro(umbrella, take, EngineConfig(subset_limit=3))
    with pytest.raises(EnumerationLimit):
        minimal_conflicts(umbrella, take, EngineConfig(conflict_limit=3))
