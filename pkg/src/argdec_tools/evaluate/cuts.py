"""Level-cut evaluation

Qualitative utilities computed syntactically: the pessimistic value is the
largest ``alpha`` such that the ``>= alpha`` cut of ``K_d`` entails every goal
of priority ``> n(alpha)``; the optimistic value is the largest ``alpha`` such
that the ``> n(alpha)`` cuts of ``K_d`` and ``G`` are consistent together.
No interpretation is ever enumerated.
"""

import logging
from fractions import Fraction

from argdec_tools.bases.base import cut, with_decision
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ScaleValue, ZERO, order_reverse, scale_grid
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig

logger = logging.getLogger(__name__)


def cut_grid(inst: Instance) -> list[ScaleValue]:
    """Candidate values: 0, 1, every weight and priority, and their reverses."""
    return scale_grid([*inst.kb.weights, *inst.goals.weights])


def pessimistic_holds(
    inst: Instance, d: Decision, alpha: ScaleValue, config: EngineConfig | None = None
) -> bool:
    """Whether the ``>= alpha`` cut of ``K_d`` entails the goals above ``n(alpha)``."""
    kb_d = with_decision(inst.kb, d)
    return inst.backend(config).entails_all(
        cut(kb_d, alpha), cut(inst.goals, order_reverse(alpha), strict=True)
    )


def optimistic_holds(
    inst: Instance, d: Decision, alpha: ScaleValue, config: EngineConfig | None = None
) -> bool:
    """Whether the ``> n(alpha)`` cuts of ``K_d`` and ``G`` are consistent together."""
    kb_d = with_decision(inst.kb, d)
    level = order_reverse(alpha)
    return inst.backend(config).is_consistent(
        [*cut(kb_d, level, strict=True), *cut(inst.goals, level, strict=True)]
    )


def _largest(grid: list[ScaleValue], holds) -> ScaleValue:
    # Both predicates are antitone in alpha.
    for alpha in reversed(grid):
        if holds(alpha):
            return alpha
    return ZERO


def pessimistic_cuts(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """Pessimistic utility of ``d`` by level cuts.

    Args:
        inst: The decision instance.
        d: One of its decisions.
        config: Backend selection and bounds.

    Returns:
        ScaleValue: The maximal grid value passing :func:`pessimistic_holds`,
        0 if none does.

    Raises:
        NotNormalized: If K* or G* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
    """
    inst.require_feasible(d, config)
    value = _largest(cut_grid(inst), lambda alpha: pessimistic_holds(inst, d, alpha, config))
    logger.debug("pessimistic cut value of %s: %s", d, value)
    return value


def optimistic_cuts(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> ScaleValue:
    """Optimistic utility of ``d`` by level cuts; the maximal grid value
    passing :func:`optimistic_holds`, 0 if none does.

    Raises:
        NotNormalized: If K* or G* is inconsistent.
        InfeasibleDecision: If K* together with ``d`` is inconsistent.
    """
    inst.require_feasible(d, config)
    value = _largest(cut_grid(inst), lambda alpha: optimistic_holds(inst, d, alpha, config))
    logger.debug("optimistic cut value of %s: %s", d, value)
    return value


def grid_is_sufficient(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> bool:
    """Re-run both searches with the midpoints of adjacent grid values added.

    Returns:
        bool: True when no midpoint satisfies a predicate above the value the
        plain grid search returned.
    """
    grid = cut_grid(inst)
    midpoints = [(low + high) / Fraction(2) for low, high in zip(grid, grid[1:])]
    pessimistic = pessimistic_cuts(inst, d, config)
    optimistic = optimistic_cuts(inst, d, config)
    for mid in midpoints:
        if mid > pessimistic and pessimistic_holds(inst, d, mid, config):
            logger.warning("pessimistic predicate holds at %s above %s", mid, pessimistic)
            return False
        if mid > optimistic and optimistic_holds(inst, d, mid, config):
            logger.warning("optimistic predicate holds at %s above %s", mid, optimistic)
            return False
    return True
