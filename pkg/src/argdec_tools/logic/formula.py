"""Propositional formulas

Immutable syntax trees over named atoms, truth-functional evaluation and a
pretty-printer that emits the minimal parentheses needed to reproduce the
same tree under the grammar's precedence (~ > & > | > -> > <->, with ->
right-associative and the other binary connectives left-associative).
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

Interpretation = Mapping[str, bool]


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Const:
    value: bool

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


Formula = Var | Const | Not | And | Or | Implies | Iff

TRUE = Const(True)
FALSE = Const(False)

_BINARY = (And, Or, Implies, Iff)
_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}


def atoms(phi: Formula) -> frozenset[str]:
    """Return the names of the atoms occurring in ``phi``."""
    found: set[str] = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.arg)
        elif isinstance(node, _BINARY):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def atoms_of(phis: Iterable[Formula]) -> frozenset[str]:
    """Return the atoms occurring in any of ``phis``."""
    found: set[str] = set()
    for phi in phis:
        found |= atoms(phi)
    return frozenset(found)


def evaluate(omega: Interpretation, phi: Formula) -> bool:
    """Truth value of ``phi`` under the interpretation ``omega``.

    Args:
        omega: Assignment covering every atom of ``phi``.
        phi: The formula to evaluate.

    Returns:
        bool: Whether ``omega`` is a model of ``phi``.
    """
    match phi:
        case Var(name):
            return omega[name]
        case Const(value):
            return value
        case Not(arg):
            return not evaluate(omega, arg)
        case And(left, right):
            return evaluate(omega, left) and evaluate(omega, right)
        case Or(left, right):
            return evaluate(omega, left) or evaluate(omega, right)
        case Implies(left, right):
            return (not evaluate(omega, left)) or evaluate(omega, right)
        case Iff(left, right):
            return evaluate(omega, left) == evaluate(omega, right)
    raise TypeError(f"Not a formula: {phi!r}")


def negate(phi: Formula) -> Formula:
    """Negation of ``phi``, stripping a leading negation instead of doubling it."""
    if isinstance(phi, Not):
        return phi.arg
    return Not(phi)


def conjoin(phis: Iterable[Formula]) -> Formula:
    """Left-nested conjunction of ``phis``; ``true`` when empty."""
    result: Formula | None = None
    for phi in phis:
        result = phi if result is None else And(result, phi)
    return TRUE if result is None else result


def to_text(phi: Formula) -> str:
    """Render ``phi`` in the instance grammar with minimal parentheses."""
    match phi:
        case Var(name):
            return name
        case Const(value):
            return "true" if value else "false"
        case Not(arg):
            inner = to_text(arg)
            if _PRECEDENCE[type(arg)] < _PRECEDENCE[Not]:
                inner = f"({inner})"
            return f"~{inner}"
    kind = type(phi)
    level = _PRECEDENCE[kind]
    left, right = to_text(phi.left), to_text(phi.right)
    left_level, right_level = _PRECEDENCE[type(phi.left)], _PRECEDENCE[type(phi.right)]
    right_assoc = kind is Implies
    if left_level < level or (right_assoc and left_level == level):
        left = f"({left})"
    if right_level < level or (not right_assoc and right_level == level):
        right = f"({right})"
    return f"{left} {_SYMBOL[kind]} {right}"
