"""Vectorised truth tables.

Rows follow the canonical interpretation order: atoms sorted by name, the
first atom most significant, false before true.
"""

from collections.abc import Iterable

import numpy as np

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


class TruthTable:
    """All total interpretations of a vocabulary, one row each."""

    def __init__(self, vocabulary: Iterable[str]):
        self.atoms = tuple(sorted(set(vocabulary)))
        self.rows = 1 << len(self.atoms)
        index = np.arange(self.rows, dtype=np.int64)
        width = len(self.atoms)
        self.columns = {
            name: ((index >> (width - 1 - j)) & 1).astype(bool)
            for j, name in enumerate(self.atoms)
        }

    def evaluate(self, phi: Formula) -> np.ndarray:
        """Boolean column holding the truth value of ``phi`` in every row."""
        match phi:
            case Var(name):
                return self.columns[name]
            case Const(value):
                return np.full(self.rows, value, dtype=bool)
            case Not(arg):
                return ~self.evaluate(arg)
            case And(left, right):
                return self.evaluate(left) & self.evaluate(right)
            case Or(left, right):
                return self.evaluate(left) | self.evaluate(right)
            case Implies(left, right):
                return ~self.evaluate(left) | self.evaluate(right)
            case Iff(left, right):
                return self.evaluate(left) == self.evaluate(right)
        raise TypeError(f"Not a formula: {phi!r}")

    def satisfying(self, phis: Iterable[Formula]) -> np.ndarray:
        """Boolean column of the rows satisfying every formula of ``phis``."""
        mask = np.ones(self.rows, dtype=bool)
        for phi in phis:
            mask &= self.evaluate(phi)
        return mask

    def interpretation(self, row: int) -> dict[str, bool]:
        return {name: bool(self.columns[name][row]) for name in self.atoms}

    def bitset(self, phi: Formula) -> int:
        """Models of ``phi`` packed into an integer, bit i set for row i."""
        packed = np.packbits(self.evaluate(phi), bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    @property
    def full(self) -> int:
        return (1 << self.rows) - 1
