"""Atoms, decision literals and decisions."""

import re
from dataclasses import dataclass
from enum import Enum

from argdec_tools.errors import VocabError
from argdec_tools.logic.formula import TRUE, And, Const, Formula, Not, Var, conjoin

ATOM_PATTERN = re.compile(r"[a-z_][a-z0-9_]*")


class AtomKind(Enum):
    STATE = "state"
    DECISION = "decision"


@dataclass(frozen=True, order=True)
class Atom:
    name: str
    kind: AtomKind

    def __post_init__(self):
        if not ATOM_PATTERN.fullmatch(self.name) or self.name in ("true", "false"):
            raise VocabError(f"Invalid atom name {self.name!r}")


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    positive: bool = True

    def formula(self) -> Formula:
        return Var(self.atom) if self.positive else Not(Var(self.atom))

    def __str__(self) -> str:
        return self.atom if self.positive else f"~{self.atom}"


@dataclass(frozen=True)
class Decision:
    """A conjunction of decision literals; no literals is the do-nothing decision."""

    literals: tuple[Literal, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(set(self.literals)))
        names = [lit.atom for lit in ordered]
        if len(names) != len(set(names)):
            raise VocabError(f"Decision mentions an atom twice: {self.text()}")
        object.__setattr__(self, "literals", ordered)

    @classmethod
    def of(cls, *literals: str) -> "Decision":
        """Build a decision from literal strings such as ``"u"`` or ``"~u"``."""
        return cls(
            tuple(
                Literal(text[1:], False) if text.startswith("~") else Literal(text)
                for text in literals
            )
        )

    @classmethod
    def from_formula(cls, phi: Formula, decision_atoms: frozenset[str]) -> "Decision":
        """Read a decision from a conjunction of decision literals or ``true``.

        Raises:
            VocabError: If ``phi`` is not such a conjunction.
        """
        if phi == TRUE:
            return cls()
        literals: list[Literal] = []
        stack = [phi]
        while stack:
            node = stack.pop()
            if isinstance(node, And):
                stack.extend((node.right, node.left))
            elif isinstance(node, Var):
                literals.append(Literal(node.name))
            elif isinstance(node, Not) and isinstance(node.arg, Var):
                literals.append(Literal(node.arg.name, False))
            elif isinstance(node, Const) and node.value:
                continue
            else:
                raise VocabError(f"Not a conjunction of decision literals: {phi}")
        for lit in literals:
            if lit.atom not in decision_atoms:
                raise VocabError(f"{lit.atom!r} is not a decision atom")
        return cls(tuple(literals))

    def formula(self) -> Formula:
        return conjoin(lit.formula() for lit in self.literals)

    def formulas(self) -> tuple[Formula, ...]:
        return tuple(lit.formula() for lit in self.literals)

    def text(self) -> str:
        if not self.literals:
            return "true"
        return " & ".join(str(lit) for lit in self.literals)

    def __str__(self) -> str:
        return self.text()
