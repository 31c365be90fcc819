import logging
from fractions import Fraction
from pathlib import Path

import pytest

from argdec_tools.bases.instance import (
    PIPELINE_ACCEPTABILITY,
    PIPELINE_CONSISTENT,
    dump_instance,
    load_instance,
)
from argdec_tools.errors import (
    InfeasibleDecision,
    NotNormalized,
    ParseError,
    ScaleError,
    UnknownAtom,
    UnknownDecision,
    VocabError,
)
from argdec_tools.logic.formula import Not, Var
from argdec_tools.logic.vocabulary import Decision
from tests.fixtures import INFEASIBLE, UMBRELLA

DATA = Path(__file__).parents[3] / "data"


def test_umbrella_contents(umbrella):
    assert umbrella.decision_atoms == {"u"}
    assert umbrella.state_atoms == {"c", "l", "r", "w"}
    assert umbrella.atom_names == ("c", "l", "r", "u", "w")
    assert len(umbrella.kb) == 7
    assert umbrella.kb.weight_of(Var("c")) == 1
    assert umbrella.goals.weight_of(Not(Var("l"))) == Fraction(2, 5)
    assert umbrella.decisions == (Decision.of("u"), Decision.of("~u"))


def test_pipelines(umbrella, conflict):
    assert umbrella.pipeline() == PIPELINE_CONSISTENT
    assert conflict.pipeline() == PIPELINE_ACCEPTABILITY


def test_data_files_load():
    umbrella = load_instance((DATA / "umbrella.pdl").read_text())
    assert umbrella == load_instance(UMBRELLA)
    assert not load_instance((DATA / "conflict.pdl").read_text()).kb_consistent()


def test_dump_round_trip(umbrella, conflict):
    for inst in (umbrella, conflict):
        assert load_instance(dump_instance(inst)) == inst


def test_decision_lookup(umbrella, take):
    assert umbrella.decision(" u ") == take
    with pytest.raises(UnknownDecision):
        umbrella.decision("u & ~u")
    with pytest.raises(UnknownDecision):
        umbrella.decision("w")


def test_preconditions(conflict, umbrella, take):
    with pytest.raises(NotNormalized):
        conflict.require_normalized()
    umbrella.require_feasible(take)
    infeasible = load_instance(INFEASIBLE)
    with pytest.raises(InfeasibleDecision):
        infeasible.require_feasible(Decision.of("d"))


def test_goal_inconsistency_only_matters_with_goals():
    inst = load_instance("decision_atoms: d\nkb:\nd -> a : 1\ngoals:\ng : 1\n~g : 1/2\ndecisions:\nd\n")
    with pytest.raises(NotNormalized, match="G"):
        inst.require_normalized()
    inst.require_normalized(goals=False)


def test_duplicates_and_zero_weights_warn(caplog):
    text = "decision_atoms: d\nkb:\na : 1/5\na : 3/5\nb : 0\ngoals:\ng : 1\ndecisions:\nd\nd\n"
    with caplog.at_level(logging.WARNING):
        inst = load_instance(text)
    assert inst.kb.formulas == (Var("a"),)
    assert inst.kb.weight_of(Var("a")) == Fraction(3, 5)
    assert inst.decisions == (Decision.of("d"),)
    assert "duplicate kb entry" in caplog.text
    assert "zero-weight" in caplog.text
    assert "duplicate decision" in caplog.text


def test_comments_and_decimal_weights():
    inst = load_instance("# note\ndecision_atoms: d # the choice\nkb:\nd -> a : 0.5\ngoals:\na : 1\ndecisions:\nd\n")
    assert inst.kb.weights == (Fraction(1, 2),)


def test_empty_decision():
    inst = load_instance("decision_atoms: d\nkb:\ngoals:\ng : 1\ndecisions:\ntrue\n")
    assert inst.decisions == (Decision(),)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        load_instance("decision_atoms: d\nkb:\na & : 1\ngoals:\ndecisions:\nd\n")
    assert info.value.line == 3


def test_missing_weight():
    with pytest.raises(ParseError, match="formula : weight"):
        load_instance("decision_atoms: d\nkb:\na\ndecisions:\nd\n")


def test_entry_outside_section():
    with pytest.raises(ParseError, match="outside"):
        load_instance("a : 1\n")


def test_weight_out_of_range():
    with pytest.raises(ScaleError, match="line 3"):
        load_instance("decision_atoms: d\nkb:\na : 2\ngoals:\ndecisions:\nd\n")


def test_goal_over_decision_atom():
    with pytest.raises(VocabError, match="decision atoms"):
        load_instance("decision_atoms: d\nkb:\ngoals:\nd : 1\ndecisions:\nd\n")


def test_decision_over_state_atom():
    with pytest.raises(VocabError, match="line 5"):
        load_instance("decision_atoms: d\nkb:\ngoals:\ndecisions:\na\n")


def test_no_decisions():
    with pytest.raises(VocabError, match="empty"):
        load_instance("decision_atoms: d\nkb:\na : 1\ngoals:\ndecisions:\n")


def test_strict_atoms():
    text = "decision_atoms: d\nstate_atoms: a\nkb:\nb : 1\ngoals:\ndecisions:\nd\n"
    with pytest.raises(UnknownAtom) as info:
        load_instance(text)
    assert info.value.line == 4


def test_overlapping_declarations():
    with pytest.raises(VocabError, match="both"):
        load_instance("decision_atoms: d\nstate_atoms: d\nkb:\ngoals:\ndecisions:\nd\n")
