"""Hypothesis strategies for formulas."""

from hypothesis import strategies as st

from argdec_tools.logic.formula import FALSE, TRUE, And, Iff, Implies, Not, Or, Var

ATOM_NAMES = ("a", "b", "c", "d", "e")


def formulas(names: tuple[str, ...] = ATOM_NAMES, max_leaves: int = 12, constants: bool = True):
    leaves = st.sampled_from(names).map(Var)
    if constants:
        leaves = st.one_of(leaves, st.sampled_from((TRUE, FALSE)))
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Not, children),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
            st.builds(Iff, children, children),
        ),
        max_leaves=max_leaves,
    )
