"""Model-enumeration semantics

The possibility distribution of ``K_d``, the utility function of ``G`` and
the pessimistic / optimistic qualitative utilities computed over every
interpretation of the instance vocabulary.

Distributions are evaluated column-wise on a truth table. Scale values are
handled as indices into the instance's sorted scale grid, which is closed
under the order-reversing map, so min/max stay exact integer operations.
"""

from collections.abc import Iterator

import numpy as np

from argdec_tools.bases.base import GoalBase, KnowledgeBase, WeightedBase, with_decision
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ONE, ScaleValue, order_reverse, scale_grid
from argdec_tools.errors import BackendLimit
from argdec_tools.logic.formula import Interpretation, evaluate
from argdec_tools.logic.table import TruthTable
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig, resolve


def _pointwise(omega: Interpretation, base: WeightedBase) -> ScaleValue:
    return min(
        (ONE if evaluate(omega, e.formula) else order_reverse(e.weight) for e in base),
        default=ONE,
    )


def possibility(omega: Interpretation, kb_d: KnowledgeBase) -> ScaleValue:
    """pi(omega) = min over (k, rho) of max(v(k), n(rho)); 1 for an empty base."""
    return _pointwise(omega, kb_d)


def utility(omega: Interpretation, goals: GoalBase) -> ScaleValue:
    """mu(omega) = min over (g, lambda) of max(v(g), n(lambda)); 1 for no goals."""
    return _pointwise(omega, goals)


class DistributionTable:
    """A scale value for every interpretation of a vocabulary."""

    def __init__(self, table: TruthTable, grid: list[ScaleValue], ranks: np.ndarray):
        self.table = table
        self.grid = grid
        self.ranks = ranks

    @classmethod
    def of_base(cls, base: WeightedBase, table: TruthTable, grid: list[ScaleValue]):
        index = {value: i for i, value in enumerate(grid)}
        ranks = np.full(table.rows, len(grid) - 1, dtype=np.int64)
        for entry in base:
            satisfied = table.evaluate(entry.formula)
            penalty = index[order_reverse(entry.weight)]
            ranks = np.where(satisfied, ranks, np.minimum(ranks, penalty))
        return cls(table, grid, ranks)

    def __getitem__(self, omega: Interpretation) -> ScaleValue:
        row = 0
        for name in self.table.atoms:
            row = (row << 1) | int(bool(omega[name]))
        return self.grid[int(self.ranks[row])]

    def __len__(self) -> int:
        return self.table.rows

    def items(self) -> Iterator[tuple[dict[str, bool], ScaleValue]]:
        for row in range(self.table.rows):
            yield self.table.interpretation(row), self.grid[int(self.ranks[row])]

    def is_normalized(self) -> bool:
        return bool((self.ranks == len(self.grid) - 1).any())


def _prepare(inst: Instance, d: Decision, config: EngineConfig | None):
    config = resolve(config)
    names = inst.atom_names
    if len(names) > config.models_limit:
        raise BackendLimit(
            f"{len(names)} atoms exceed the enumeration bound of {config.models_limit}"
        )
    inst.require_feasible(d, config)
    kb_d = with_decision(inst.kb, d)
    table = TruthTable(names)
    grid = scale_grid([*kb_d.weights, *inst.goals.weights])
    pi = DistributionTable.of_base(kb_d, table, grid)
    mu = DistributionTable.of_base(inst.goals, table, grid)
    reverse = np.array([grid.index(order_reverse(v)) for v in grid], dtype=np.int64)
    return pi, mu, reverse, grid


def possibility_distribution(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> DistributionTable:
    """pi of ``K_d`` over the instance vocabulary."""
    return _prepare(inst, d, config)[0]


def utility_distribution(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> DistributionTable:
    """mu of ``G`` over the instance vocabulary, on the grid of ``K_d`` and ``G``."""
    return _prepare(inst, d, config)[1]


def pessimistic_semantic(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """E_*(d) = min over omega of max(mu(omega), n(pi(omega))).

    Raises:
        NotNormalized: If K* or G* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
        BackendLimit: If the vocabulary exceeds the enumeration bound.
    """
    pi, mu, reverse, grid = _prepare(inst, d, config)
    return grid[int(np.maximum(mu.ranks, reverse[pi.ranks]).min())]


def optimistic_semantic(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """E^*(d) = max over omega of min(mu(omega), pi(omega)).

    The order-preserving map between plausibility and preference is the
    identity on the shared scale.

    Raises:
        NotNormalized: If K* or G* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
        BackendLimit: If the vocabulary exceeds the enumeration bound.
    """
    pi, mu, _, grid = _prepare(inst, d, config)
    return grid[int(np.minimum(mu.ranks, pi.ranks).max())]
