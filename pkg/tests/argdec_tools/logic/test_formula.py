import pytest
from hypothesis import given

from argdec_tools.logic.formula import (
    FALSE,
    TRUE,
    And,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    atoms,
    atoms_of,
    conjoin,
    evaluate,
    negate,
    to_text,
)
from argdec_tools.logic.parser import parse_formula
from tests.strategies import formulas

A, B, C = Var("a"), Var("b"), Var("c")


# ── atoms ────────────────────────────────────────────────────────────────────


def test_atoms_collects_every_name():
    assert atoms(Implies(And(A, Not(B)), Or(C, TRUE))) == {"a", "b", "c"}


def test_atoms_of_constant_is_empty():
    assert atoms(FALSE) == frozenset()


def test_atoms_of_union():
    assert atoms_of([A, Iff(B, C)]) == {"a", "b", "c"}


# ── evaluate ─────────────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "phi, expected",
    [
        (And(A, B), False),
        (Or(A, B), True),
        (Implies(A, B), False),
        (Implies(B, A), True),
        (Iff(A, B), False),
        (Not(B), True),
        (TRUE, True),
    ],
)
def test_evaluate_connectives(phi, expected):
    assert evaluate({"a": True, "b": False}, phi) is expected


def test_evaluate_missing_atom_raises():
    with pytest.raises(KeyError):
        evaluate({"a": True}, And(A, B))


# ── negate / conjoin ─────────────────────────────────────────────────────────


def test_negate_strips_leading_negation():
    assert negate(Not(A)) == A


def test_negate_wraps_other_formulas():
    assert negate(And(A, B)) == Not(And(A, B))


def test_conjoin_empty_is_true():
    assert conjoin([]) == TRUE


def test_conjoin_nests_left():
    assert conjoin([A, B, C]) == And(And(A, B), C)


# ── to_text ──────────────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "phi, text",
    [
        (Implies(And(Var("r"), Not(Var("u"))), Var("w")), "r & ~u -> w"),
        (Implies(A, Implies(B, C)), "a -> b -> c"),
        (Implies(Implies(A, B), C), "(a -> b) -> c"),
        (And(A, And(B, C)), "a & (b & c)"),
        (Not(Or(A, B)), "~(a | b)"),
        (Not(Not(A)), "~~a"),
        (Iff(A, Or(B, C)), "a <-> b | c"),
        (Or(TRUE, FALSE), "true | false"),
    ],
)
def test_to_text_minimal_parentheses(phi, text):
    assert to_text(phi) == text


def test_str_uses_printer():
    assert str(And(A, Not(B))) == "a & ~b"


@given(formulas())
def test_printed_formula_parses_back_to_same_tree(phi):
    assert parse_formula(to_text(phi)) == phi
