import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argdec_tools.errors import BackendLimit, EnumerationLimit
from argdec_tools.logic.backend import (
    INCONSISTENT,
    DPLLBackend,
    TruthTableBackend,
    entails,
    equivalent,
    is_consistent,
    make_backend,
    models,
)
from argdec_tools.logic.dpll import dpll, satisfiable
from argdec_tools.logic.formula import FALSE, TRUE, And, Implies, Not, Or, Var, evaluate
from argdec_tools.logic.parser import parse_formula
from argdec_tools.utils._config import EngineConfig
from tests.strategies import ATOM_NAMES, formulas

A, B, C = Var("a"), Var("b"), Var("c")

QUERY_ATOMS = tuple(f"x{i}" for i in range(12))
DPLL = EngineConfig(backend="dpll")
TABLES = EngineConfig(backend="truth-table")


@pytest.fixture
def tables():
    return TruthTableBackend(ATOM_NAMES)


@pytest.fixture
def solver():
    return DPLLBackend()


def _random_formula(rng: np.random.Generator, depth: int):
    if depth == 0 or rng.random() < 0.25:
        atom = Var(QUERY_ATOMS[int(rng.integers(len(QUERY_ATOMS)))])
        return atom if rng.random() < 0.5 else Not(atom)
    kind = int(rng.integers(4))
    if kind == 0:
        return Not(_random_formula(rng, depth - 1))
    left, right = _random_formula(rng, depth - 1), _random_formula(rng, depth - 1)
    return (And, Or, Implies)[kind - 1](left, right)


# ── dpll ─────────────────────────────────────────────────────────────────────


def test_dpll_finds_model():
    model = dpll([(1, 2), (-1,), (2, 3)])
    assert model is not None
    assert model[1] is False and model[2] is True


def test_dpll_unsatisfiable():
    assert dpll([(1,), (-1, 2), (-2,)]) is None


def test_dpll_empty_clause():
    assert dpll([()]) is None


def test_dpll_drops_tautologies():
    assert dpll([(1, -1)]) == {}


def test_satisfiable_constants():
    assert satisfiable([TRUE])
    assert not satisfiable([FALSE])
    assert not satisfiable([A, Not(A)])


# ── backends ─────────────────────────────────────────────────────────────────


def test_entails_modus_ponens(tables, solver):
    for backend in (tables, solver):
        assert backend.entails([A, Implies(A, B)], B)
        assert not backend.entails([Implies(A, B)], B)


def test_inconsistent_premises_entail_anything(tables, solver):
    for backend in (tables, solver):
        assert backend.entails([A, Not(A)], C)


def test_equivalent_double_negation(tables, solver):
    for backend in (tables, solver):
        assert backend.equivalent(A, Not(Not(A)))
        assert backend.equivalent(Implies(A, B), Or(Not(A), B))
        assert not backend.equivalent(A, B)


def test_entails_all(tables):
    assert tables.entails_all([And(A, B)], [A, B])
    assert not tables.entails_all([A], [A, B])


@settings(max_examples=300, deadline=None)
@given(st.lists(formulas(), min_size=1, max_size=4), formulas())
def test_backends_agree(premises, goal):
    tables, solver = TruthTableBackend(ATOM_NAMES), DPLLBackend()
    assert tables.is_consistent(premises) == solver.is_consistent(premises)
    assert tables.entails(premises, goal) == solver.entails(premises, goal)


def test_backends_agree_on_seeded_queries():
    rng = np.random.default_rng(2024)
    tables, solver = TruthTableBackend(QUERY_ATOMS), DPLLBackend()
    for _ in range(1000):
        premises = [_random_formula(rng, 3) for _ in range(int(rng.integers(1, 5)))]
        goal = _random_formula(rng, 3)
        assert tables.is_consistent(premises) == solver.is_consistent(premises)
        assert tables.entails(premises, goal) == solver.entails(premises, goal)


# ── support_table ────────────────────────────────────────────────────────────


def test_support_table_marks_inconsistent_subsets(tables):
    table = tables.support_table([A, Not(A), B])
    assert table[0b011] == INCONSISTENT
    assert table[0b111] == INCONSISTENT
    assert table[0b101] != INCONSISTENT


def test_support_table_reports_entailed_targets(tables):
    items = [Implies(A, B), A]
    table = tables.support_table(items, targets=[B, A])
    assert table[0b00] == 0
    assert table[0b10] == 0b10
    assert table[0b11] == 0b11


def test_support_table_uses_context(tables):
    table = tables.support_table([Implies(A, B)], context=[A], targets=[B])
    assert table == [0, 1]


@settings(max_examples=100, deadline=None)
@given(
    st.lists(formulas(max_leaves=6), min_size=1, max_size=5),
    st.lists(formulas(max_leaves=4), max_size=2),
    st.lists(formulas(max_leaves=4), max_size=3),
)
def test_support_tables_agree(items, context, targets):
    expected = TruthTableBackend(ATOM_NAMES).support_table(items, context, targets)
    assert DPLLBackend().support_table(items, context, targets) == expected


def test_support_table_limit(tables):
    with pytest.raises(EnumerationLimit):
        tables.support_table([A] * 5, limit=4)


# ── selection and module helpers ─────────────────────────────────────────────


def test_auto_backend_switches_on_vocabulary_size():
    small = make_backend(["a", "b"], EngineConfig(truth_table_limit=2))
    large = make_backend(["a", "b", "c"], EngineConfig(truth_table_limit=2))
    assert isinstance(small, TruthTableBackend)
    assert isinstance(large, DPLLBackend)


def test_forced_truth_table_refuses_large_vocabulary():
    with pytest.raises(BackendLimit):
        make_backend(["a", "b", "c"], EngineConfig(backend="truth-table", truth_table_limit=2))


def test_forced_dpll():
    assert isinstance(make_backend(["a"], DPLL), DPLLBackend)


def test_module_helpers():
    phi = parse_formula("a -> b")
    assert is_consistent([phi, A])
    assert entails([phi, A], B, DPLL)
    assert equivalent(phi, parse_formula("~b -> ~a"), TABLES)


def test_models_canonical_order():
    found = models([Or(A, B)], ["b", "a"])
    assert found == [
        {"a": False, "b": True},
        {"a": True, "b": False},
        {"a": True, "b": True},
    ]


def test_models_limit():
    with pytest.raises(BackendLimit):
        models([A], ["a", "b", "c"], EngineConfig(models_limit=2))


@settings(max_examples=200, deadline=None)
@given(st.lists(formulas(), max_size=4), formulas())
def test_entailment_is_truth_in_every_model(phis, goal):
    expected = all(evaluate(omega, goal) for omega in models(phis, ATOM_NAMES))
    assert entails(phis, goal) == expected
    assert entails(phis, goal, DPLL) == expected


def test_models_of_the_umbrella_knowledge_with_the_umbrella(umbrella):
    found = models([*umbrella.kb.formulas, Var("u")], umbrella.atom_names)
    assert found == [{"c": True, "l": True, "r": True, "u": True, "w": False}]
    assert all(omega["l"] and not omega["w"] and omega["c"] for omega in found)
