"""DPLL satisfiability over Tseitin clauses.

Clauses are tuples of non-zero integers; ``-v`` is the negation of ``v``.
Auxiliary variables introduced by the encoding never leave this module.
"""

from collections.abc import Iterable

from argdec_tools.logic.formula import (
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
)

Clause = tuple[int, ...]


class TseitinEncoder:
    """Incremental Tseitin encoding with structural sharing of subformulas."""

    def __init__(self):
        self.variables: dict[str, int] = {}
        self.clauses: list[Clause] = []
        self._cache: dict[Formula, int] = {}
        self._next = 1

    def _fresh(self) -> int:
        var = self._next
        self._next += 1
        return var

    def literal(self, phi: Formula) -> int:
        """Literal equivalent to ``phi`` under the emitted definitions."""
        cached = self._cache.get(phi)
        if cached is not None:
            return cached
        match phi:
            case Var(name):
                if name not in self.variables:
                    self.variables[name] = self._fresh()
                lit = self.variables[name]
            case Const(value):
                lit = self._fresh()
                self.clauses.append((lit,) if value else (-lit,))
            case Not(arg):
                lit = -self.literal(arg)
            case And(left, right):
                a, b = self.literal(left), self.literal(right)
                lit = self._fresh()
                self.clauses += [(-lit, a), (-lit, b), (lit, -a, -b)]
            case Or(left, right):
                a, b = self.literal(left), self.literal(right)
                lit = self._fresh()
                self.clauses += [(-lit, a, b), (lit, -a), (lit, -b)]
            case Implies(left, right):
                a, b = self.literal(left), self.literal(right)
                lit = self._fresh()
                self.clauses += [(-lit, -a, b), (lit, a), (lit, -b)]
            case Iff(left, right):
                a, b = self.literal(left), self.literal(right)
                lit = self._fresh()
                self.clauses += [(-lit, -a, b), (-lit, a, -b), (lit, a, b), (lit, -a, -b)]
            case _:
                raise TypeError(f"Not a formula: {phi!r}")
        self._cache[phi] = lit
        return lit

    def assert_formula(self, phi: Formula):
        self.clauses.append((self.literal(phi),))


def _assign(clauses: list[Clause], lit: int) -> list[Clause] | None:
    """Simplify ``clauses`` under ``lit``; None when a clause becomes empty."""
    result: list[Clause] = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            reduced = tuple(x for x in clause if x != -lit)
            if not reduced:
                return None
            result.append(reduced)
        else:
            result.append(clause)
    return result


def _unit_propagate(
    clauses: list[Clause], model: dict[int, bool]
) -> list[Clause] | None:
    while True:
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is None:
            return clauses
        model[abs(unit)] = unit > 0
        simplified = _assign(clauses, unit)
        if simplified is None:
            return None
        clauses = simplified


def _pure_literals(clauses: list[Clause]) -> list[int]:
    seen: set[int] = set()
    for clause in clauses:
        seen.update(clause)
    return [lit for lit in seen if -lit not in seen]


def dpll(clauses: Iterable[Clause]) -> dict[int, bool] | None:
    """Decide satisfiability; return a (partial) model or None.

    Unit propagation and pure-literal elimination at every node, branching on
    the first literal of a shortest clause.
    """
    pending: list[Clause] = [tuple(sorted(set(c))) for c in clauses]
    if any(not clause for clause in pending):
        return None
    # Tautological clauses never constrain the search.
    pending = [c for c in pending if not any(-x in c for x in c)]
    return _search(pending, {})


def _search(clauses: list[Clause], model: dict[int, bool]) -> dict[int, bool] | None:
    model = dict(model)
    propagated = _unit_propagate(clauses, model)
    if propagated is None:
        return None
    clauses = propagated
    for lit in _pure_literals(clauses):
        model[abs(lit)] = lit > 0
        clauses = _assign(clauses, lit)
    if not clauses:
        return model
    branch = min(clauses, key=len)[0]
    for lit in (branch, -branch):
        reduced = _assign(clauses, lit)
        if reduced is None:
            continue
        found = _search(reduced + [(lit,)], model)
        if found is not None:
            return found
    return None


def satisfiable(phis: Iterable[Formula]) -> bool:
    """Whether the conjunction of ``phis`` has a model."""
    encoder = TseitinEncoder()
    for phi in phis:
        encoder.assert_formula(phi)
    return dpll(encoder.clauses) is not None
