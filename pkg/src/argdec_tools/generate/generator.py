"""Seeded random decision instances.

Knowledge entries are random clauses and rules whose antecedents favour
decision atoms, e.g. ``p1 & ~d0 -> p3``; goals are literals or clauses
over state atoms. The same configuration always yields the same instance.
"""

import itertools
import logging
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from functools import reduce

import numpy as np

from argdec_tools.bases.base import GoalBase, KnowledgeBase, WeightedFormula
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ONE, ZERO, parse_weight
from argdec_tools.errors import GenerationExhausted
from argdec_tools.logic.backend import make_backend
from argdec_tools.logic.formula import Formula, Implies, Not, Or, Var, conjoin
from argdec_tools.logic.vocabulary import Atom, AtomKind, Decision, Literal
from argdec_tools.utils.constants import (
    DECISION_PREFIX,
    GENERATION_RETRIES,
    LEVEL_POOL,
    STATE_PREFIX,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenConfig:
    """Generator parameters.

    Args:
        state_atoms: Number of state atoms ``p0, p1, ...``.
        decision_atoms: Number of decision atoms ``d0, d1, ...``.
        kb_entries: Knowledge base size.
        goal_entries: Goal base size.
        decisions: Number of distinct decisions offered.
        clause_len_max: Longest clause or rule antecedent.
        level_pool: Weights and priorities to draw from; must contain 1.
        seed: Seed of the random generator.
        require_consistent_k: Resample until K* is consistent.
        require_consistent_g: Resample until G* is consistent.
        require_inconsistent_k: Resample until K* is inconsistent.
        retries: Resampling attempts before giving up.
    """

    state_atoms: int = 4
    decision_atoms: int = 1
    kb_entries: int = 6
    goal_entries: int = 2
    decisions: int = 2
    clause_len_max: int = 2
    level_pool: tuple[Fraction, ...] = tuple(Fraction(v) for v in LEVEL_POOL)
    seed: int = 0
    require_consistent_k: bool = False
    require_consistent_g: bool = False
    require_inconsistent_k: bool = False
    retries: int = GENERATION_RETRIES

    def __post_init__(self):
        for name in (
            "state_atoms",
            "decision_atoms",
            "kb_entries",
            "goal_entries",
            "decisions",
            "clause_len_max",
            "retries",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not self.level_pool or any(not ZERO < w <= ONE for w in self.level_pool):
            raise ValueError("level_pool must hold values in (0, 1]")
        if ONE not in self.level_pool:
            raise ValueError("level_pool must contain 1")
        if self.require_consistent_k and self.require_inconsistent_k:
            raise ValueError("K* cannot be required both consistent and inconsistent")
        available = 3**self.decision_atoms - 1
        if self.decisions > available:
            raise ValueError(
                f"{self.decision_atoms} decision atoms allow only {available} decisions"
            )


_SPEC_KEYS = {
    "seed": "seed",
    "stateAtoms": "state_atoms",
    "decisionAtoms": "decision_atoms",
    "kbEntries": "kb_entries",
    "goalEntries": "goal_entries",
    "decisions": "decisions",
    "clauseLenMax": "clause_len_max",
    "retries": "retries",
}
_SPEC_FLAGS = {
    "consistentK": "require_consistent_k",
    "consistentG": "require_consistent_g",
    "inconsistentK": "require_inconsistent_k",
}


def parse_gen_spec(text: str) -> tuple[GenConfig, int]:
    """Read ``"seed=1,trials=500,stateAtoms=6,...,consistentK"``.

    ``levelPool`` takes ``;``-separated weights (``levelPool=1/2;1``).

    Returns:
        tuple[GenConfig, int]: The configuration and the trial count (1 when
        ``trials`` is absent).

    Raises:
        ValueError: On an unknown key, a malformed value or an invalid
            configuration.
    """
    values: dict = {}
    trials = 1
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, _, raw = item.partition("=")
        key = key.strip()
        if key in _SPEC_FLAGS and not raw:
            values[_SPEC_FLAGS[key]] = True
        elif key == "trials":
            trials = int(raw)
        elif key == "levelPool":
            values["level_pool"] = tuple(parse_weight(w) for w in raw.split(";"))
        elif key in _SPEC_KEYS:
            values[_SPEC_KEYS[key]] = int(raw)
        else:
            raise ValueError(f"Unknown generator setting {item!r}")
    if trials < 1:
        raise ValueError("trials must be positive")
    return GenConfig(**values), trials


def format_gen_spec(cfg: GenConfig) -> str:
    """Inverse of :func:`parse_gen_spec` (without the trial count)."""
    names = {field: key for key, field in _SPEC_KEYS.items()}
    flags = {field: key for key, field in _SPEC_FLAGS.items()}
    parts = []
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if f.name in names:
            parts.append(f"{names[f.name]}={value}")
        elif f.name in flags and value:
            parts.append(flags[f.name])
    parts.append("levelPool=" + ";".join(str(w) for w in cfg.level_pool))
    return ",".join(parts)


# ── Sampling ──


def _literal(rng: np.random.Generator, names: list[str]) -> Formula:
    atom = Var(names[int(rng.integers(len(names)))])
    return atom if rng.random() < 0.5 else Not(atom)


def _clause(rng: np.random.Generator, names: list[str], length_max: int) -> Formula:
    length = int(rng.integers(1, length_max + 1))
    return reduce(Or, [_literal(rng, names) for _ in range(length)])


def _rule(
    rng: np.random.Generator, states: list[str], decisions: list[str], length_max: int
) -> Formula:
    length = int(rng.integers(1, length_max + 1))
    antecedent = []
    if rng.random() < 0.6:
        antecedent.append(_literal(rng, decisions))
    while len(antecedent) < length:
        antecedent.append(_literal(rng, states))
    return Implies(conjoin(antecedent), _literal(rng, states))


def _distinct(draw, count: int, attempts: int, label: str) -> list[Formula]:
    found: dict[Formula, None] = {}
    for _ in range(attempts):
        if len(found) == count:
            break
        found.setdefault(draw(), None)
    if len(found) < count:
        raise GenerationExhausted(f"Could not draw {count} distinct {label} formulas")
    return list(found)


def _weights(rng: np.random.Generator, pool, count: int) -> list[Fraction]:
    return [pool[int(i)] for i in rng.integers(len(pool), size=count)]


def _decisions(rng: np.random.Generator, names: list[str], count: int) -> tuple[Decision, ...]:
    options = []
    for signs in itertools.product((None, True, False), repeat=len(names)):
        literals = tuple(Literal(n, s) for n, s in zip(names, signs) if s is not None)
        if literals:
            options.append(Decision(literals))
    chosen = sorted(rng.choice(len(options), size=count, replace=False))
    return tuple(options[int(i)] for i in chosen)


def _sample(cfg: GenConfig, rng: np.random.Generator) -> Instance:
    states = [f"{STATE_PREFIX}{i}" for i in range(cfg.state_atoms)]
    decisions = [f"{DECISION_PREFIX}{i}" for i in range(cfg.decision_atoms)]
    attempts = cfg.retries * max(cfg.kb_entries, cfg.goal_entries)

    def knowledge() -> Formula:
        if rng.random() < 0.5:
            return _rule(rng, states, decisions, cfg.clause_len_max)
        return _clause(rng, states + decisions, cfg.clause_len_max)

    kb = _distinct(knowledge, cfg.kb_entries, attempts, "knowledge")
    goals = _distinct(
        lambda: _clause(rng, states, cfg.clause_len_max), cfg.goal_entries, attempts, "goal"
    )
    kb_weights = _weights(rng, cfg.level_pool, len(kb))
    goal_weights = _weights(rng, cfg.level_pool, len(goals))
    vocabulary = frozenset(
        [Atom(n, AtomKind.STATE) for n in states] + [Atom(n, AtomKind.DECISION) for n in decisions]
    )
    return Instance(
        vocabulary,
        KnowledgeBase(tuple(map(WeightedFormula, kb, kb_weights))),
        GoalBase(tuple(map(WeightedFormula, goals, goal_weights))),
        _decisions(rng, decisions, cfg.decisions),
    )


def _accepted(cfg: GenConfig, inst: Instance) -> bool:
    backend = make_backend(inst.atom_names)
    if cfg.require_consistent_k or cfg.require_inconsistent_k:
        consistent = backend.is_consistent(inst.kb.formulas)
        if consistent != cfg.require_consistent_k:
            return False
    if cfg.require_consistent_g and not backend.is_consistent(inst.goals.formulas):
        return False
    return True


def generate(cfg: GenConfig) -> Instance:
    """Draw an instance, resampling until the consistency requirements hold.

    Raises:
        GenerationExhausted: If ``cfg.retries`` draws all fail the requirements.
    """
    rng = np.random.default_rng(cfg.seed)
    for attempt in range(1, cfg.retries + 1):
        inst = _sample(cfg, rng)
        if _accepted(cfg, inst):
            logger.debug("seed %d accepted after %d draws", cfg.seed, attempt)
            return inst
    raise GenerationExhausted(
        f"No instance met the requirements after {cfg.retries} draws (seed {cfg.seed})"
    )


def generate_many(cfg: GenConfig, trials: int):
    """Instances for seeds ``cfg.seed, cfg.seed + 1, ...``."""
    for trial in range(trials):
        yield generate(replace(cfg, seed=cfg.seed + trial))
