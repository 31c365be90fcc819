"""Decision instances and their line-oriented file format.

Example::

    decision_atoms: u
    kb:
    u -> l : 1
    c -> r : 3/5
    goals:
    ~w : 1
    decisions:
    u
    ~u

``#`` starts a comment. ``state_atoms:`` optionally declares state atoms;
otherwise every non-decision atom of the bases is a state atom.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from argdec_tools.bases.base import GoalBase, KnowledgeBase, WeightedFormula
from argdec_tools.bases.scale import ZERO, parse_weight
from argdec_tools.errors import (
    InfeasibleDecision,
    NotNormalized,
    ParseError,
    ScaleError,
    UnknownDecision,
    VocabError,
)
from argdec_tools.logic.backend import make_backend
from argdec_tools.logic.formula import Formula, atoms, atoms_of, to_text
from argdec_tools.logic.parser import parse_formula
from argdec_tools.logic.vocabulary import Atom, AtomKind, Decision
from argdec_tools.utils._config import EngineConfig, resolve

logger = logging.getLogger(__name__)

PIPELINE_CONSISTENT = "consistent"  # Both routes of the consistent-base procedure apply
PIPELINE_ACCEPTABILITY = "acceptability"  # K* inconsistent: acceptability fixpoint

_ATOMS_HEADER = re.compile(r"^\s*(decision_atoms|state_atoms)\s*:(.*)$")
_SECTION_HEADER = re.compile(r"^\s*(kb|goals|decisions)\s*:\s*$")


@dataclass(frozen=True)
class Instance:
    vocabulary: frozenset[Atom]
    kb: KnowledgeBase
    goals: GoalBase
    decisions: tuple[Decision, ...]

    @property
    def atom_names(self) -> tuple[str, ...]:
        return tuple(sorted(atom.name for atom in self.vocabulary))

    @property
    def decision_atoms(self) -> frozenset[str]:
        return frozenset(a.name for a in self.vocabulary if a.kind is AtomKind.DECISION)

    @property
    def state_atoms(self) -> frozenset[str]:
        return frozenset(a.name for a in self.vocabulary if a.kind is AtomKind.STATE)

    def backend(self, config: EngineConfig | None = None):
        """Entailment backend over this instance's vocabulary."""
        return make_backend(self.atom_names, config)

    def kb_consistent(self, config: EngineConfig | None = None) -> bool:
        return self.backend(config).is_consistent(self.kb.formulas)

    def goals_consistent(self, config: EngineConfig | None = None) -> bool:
        return self.backend(config).is_consistent(self.goals.formulas)

    def feasible(self, d: Decision, config: EngineConfig | None = None) -> bool:
        """Whether K* together with ``d`` is consistent."""
        return self.backend(config).is_consistent([*self.kb.formulas, *d.formulas()])

    def pipeline(self, config: EngineConfig | None = None) -> str:
        if self.kb_consistent(config):
            return PIPELINE_CONSISTENT
        return PIPELINE_ACCEPTABILITY

    def require_normalized(self, config: EngineConfig | None = None, goals: bool = True):
        """Raise NotNormalized if K* (or G*, when ``goals`` is set) is inconsistent."""
        if not self.kb_consistent(config):
            raise NotNormalized("K* is inconsistent: the possibility distribution is not normalized")
        if goals and not self.goals_consistent(config):
            raise NotNormalized("G* is inconsistent: the utility function is not normalized")

    def require_feasible(
        self, d: Decision, config: EngineConfig | None = None, goals: bool = True
    ):
        """Check the preconditions shared by the evaluation routes.

        Raises:
            NotNormalized: If K* (or G*, when ``goals`` is set) is inconsistent.
            InfeasibleDecision: If K* together with ``d`` is inconsistent.
        """
        self.require_normalized(config, goals)
        if not self.feasible(d, config):
            raise InfeasibleDecision(f"Decision {d} is inconsistent with K*")

    def decision(self, text: str) -> Decision:
        """Look up a decision of the instance from its text (``"~u"``).

        Raises:
            UnknownDecision: If it is not one of the instance's decisions.
        """
        try:
            wanted = Decision.from_formula(parse_formula(text), self.decision_atoms)
        except (ParseError, VocabError) as error:
            raise UnknownDecision(f"Unknown decision {text!r}: {error}") from error
        if wanted not in self.decisions:
            raise UnknownDecision(f"Unknown decision {text!r}")
        return wanted


def _split_names(text: str, line: int) -> list[str]:
    names = [name for name in re.split(r"[,\s]+", text.strip()) if name]
    for name in names:
        try:
            Atom(name, AtomKind.STATE)
        except VocabError as error:
            raise ParseError(str(error), line) from error
    return names


def _parse_entry(raw: str, line: int, vocabulary) -> tuple[Formula, Fraction]:
    if ":" not in raw:
        raise ParseError("expected 'formula : weight'", line, len(raw.rstrip()) + 1)
    formula_text, weight_text = raw.rsplit(":", 1)
    offset = len(formula_text) - len(formula_text.lstrip())
    phi = parse_formula(formula_text.strip(), vocabulary, line, offset)
    try:
        weight = parse_weight(weight_text)
    except ScaleError as error:
        raise ScaleError(f"line {line}: {error}") from error
    return phi, weight


def _merge(entries: list[tuple[Formula, Fraction, int]], label: str) -> tuple[WeightedFormula, ...]:
    merged: dict[Formula, Fraction] = {}
    for phi, weight, line in entries:
        if weight == ZERO:
            logger.warning("line %d: dropping zero-weight %s entry %s", line, label, to_text(phi))
            continue
        if phi in merged:
            logger.warning(
                "line %d: duplicate %s entry %s; keeping weight %s",
                line,
                label,
                to_text(phi),
                max(merged[phi], weight),
            )
            merged[phi] = max(merged[phi], weight)
        else:
            merged[phi] = weight
    return tuple(WeightedFormula(phi, weight) for phi, weight in merged.items())


def load_instance(text: str, config: EngineConfig | None = None) -> Instance:
    """Parse an instance file.

    Args:
        text: File contents.
        config: Strict atom checking and the backend used for the
            consistency report.

    Returns:
        Instance: The parsed instance. Whether K* and G* are consistent is
        logged; it selects the downstream pipeline.

    Raises:
        ParseError: Malformed line or formula (with line and column).
        ScaleError: A weight outside [0, 1].
        VocabError: Goals over decision atoms, malformed decisions, or no
            decisions at all.
    """
    config = resolve(config)
    decision_names: list[str] = []
    declared_states: list[str] | None = None
    sections: dict[str, list[tuple[str, int]]] = {"kb": [], "goals": [], "decisions": []}
    current: str | None = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if header := _ATOMS_HEADER.match(line):
            names = _split_names(header.group(2), number)
            if header.group(1) == "decision_atoms":
                decision_names += names
            else:
                declared_states = (declared_states or []) + names
            current = None
            continue
        if section := _SECTION_HEADER.match(line):
            current = section.group(1)
            continue
        if current is None:
            raise ParseError("entry outside of a kb:, goals: or decisions: section", number)
        sections[current].append((line, number))

    decisions_set = frozenset(decision_names)
    if declared_states is not None:
        overlap = decisions_set & set(declared_states)
        if overlap:
            raise VocabError(f"Atoms declared both state and decision: {sorted(overlap)}")
    known = None
    if declared_states is not None and config.strict_atoms:
        known = decisions_set | set(declared_states)

    kb_raw = [(*_parse_entry(raw, n, known), n) for raw, n in sections["kb"]]
    goal_raw = [(*_parse_entry(raw, n, known), n) for raw, n in sections["goals"]]
    for phi, _, number in goal_raw:
        misuse = atoms(phi) & decisions_set
        if misuse:
            raise VocabError(f"line {number}: goal {to_text(phi)} mentions decision atoms {sorted(misuse)}")

    decisions: list[Decision] = []
    for raw, number in sections["decisions"]:
        offset = len(raw) - len(raw.lstrip())
        phi = parse_formula(raw.strip(), None, number, offset)
        try:
            d = Decision.from_formula(phi, decisions_set)
        except VocabError as error:
            raise VocabError(f"line {number}: {error}") from error
        if d in decisions:
            logger.warning("line %d: duplicate decision %s ignored", number, d)
            continue
        decisions.append(d)
    if not decisions:
        raise VocabError("The decisions: section is empty")

    kb = KnowledgeBase(_merge(kb_raw, "kb"))
    goals = GoalBase(_merge(goal_raw, "goal"))
    states = set(declared_states or ()) | (
        atoms_of([*kb.formulas, *goals.formulas]) - decisions_set
    )
    vocabulary = frozenset(
        [Atom(name, AtomKind.DECISION) for name in decisions_set]
        + [Atom(name, AtomKind.STATE) for name in states]
    )
    instance = Instance(vocabulary, kb, goals, tuple(decisions))

    kb_ok, goals_ok = instance.kb_consistent(config), instance.goals_consistent(config)
    logger.info(
        "Loaded %d knowledge entries, %d goals, %d decisions (K* %s, G* %s)",
        len(kb),
        len(goals),
        len(decisions),
        "consistent" if kb_ok else "inconsistent",
        "consistent" if goals_ok else "inconsistent",
    )
    return instance


def dump_instance(inst: Instance) -> str:
    """Render ``inst`` in the instance file format; ``load_instance`` inverts it."""
    lines = [
        "decision_atoms: " + ", ".join(sorted(inst.decision_atoms)),
        "state_atoms: " + ", ".join(sorted(inst.state_atoms)),
        "kb:",
        *(str(entry) for entry in inst.kb),
        "goals:",
        *(str(entry) for entry in inst.goals),
        "decisions:",
        *(d.text() for d in inst.decisions),
    ]
    return "\n".join(lines) + "\n"
