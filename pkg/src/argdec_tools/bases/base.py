"""Weighted bases

A base is an ordered tuple of weighted formulas. For the knowledge base
``(k, rho)`` reads "k is certain at least to degree rho"; for the goal base
``(g, lambda)`` reads "g has priority lambda".
"""

from dataclasses import dataclass

from argdec_tools.bases.scale import ONE, ZERO, ScaleValue
from argdec_tools.logic.formula import Formula, to_text
from argdec_tools.logic.vocabulary import Decision


@dataclass(frozen=True)
class WeightedFormula:
    formula: Formula
    weight: ScaleValue

    def __post_init__(self):
        if not ZERO < self.weight <= ONE:
            raise ValueError(f"Weight {self.weight} of {to_text(self.formula)} not in (0, 1]")

    def __str__(self) -> str:
        return f"{to_text(self.formula)} : {self.weight}"


@dataclass(frozen=True)
class WeightedBase:
    entries: tuple[WeightedFormula, ...] = ()

    @property
    def formulas(self) -> tuple[Formula, ...]:
        """The classical projection: formulas with weights erased."""
        return tuple(entry.formula for entry in self.entries)

    @property
    def weights(self) -> tuple[ScaleValue, ...]:
        return tuple(entry.weight for entry in self.entries)

    def weight_of(self, phi: Formula) -> ScaleValue:
        """Largest weight attached to ``phi``.

        Raises:
            KeyError: If ``phi`` is not in the base.
        """
        found = [entry.weight for entry in self.entries if entry.formula == phi]
        if not found:
            raise KeyError(to_text(phi))
        return max(found)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class KnowledgeBase(WeightedBase):
    """Uncertain knowledge ``K = {(k_j, rho_j)}``."""


class GoalBase(WeightedBase):
    """Prioritised goals ``G = {(g_i, lambda_i)}``."""


def cut(base: WeightedBase, alpha: ScaleValue, strict: bool = False) -> tuple[Formula, ...]:
    """Level cut of a base.

    Args:
        base: Knowledge or goal base.
        alpha: Threshold on the scale.
        strict: Keep weights ``> alpha`` instead of ``>= alpha``.

    Returns:
        tuple[Formula, ...]: The classical formulas passing the threshold, in
        base order.
    """
    if strict:
        return tuple(e.formula for e in base.entries if e.weight > alpha)
    return tuple(e.formula for e in base.entries if e.weight >= alpha)


def with_decision(kb: KnowledgeBase, d: Decision) -> KnowledgeBase:
    """``K_d``: the knowledge base plus every literal of ``d`` at weight 1."""
    if not d.literals:
        return kb
    added = tuple(WeightedFormula(phi, ONE) for phi in d.formulas())
    return KnowledgeBase(kb.entries + added)
