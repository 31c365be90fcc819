"""Decision reports: assembly of every command's results, JSON and text output.

JSON output is stable: keys are sorted and scale values are exact ``p/q``
strings, so identical input gives byte-identical output.
"""

import json
import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from argdec_tools.argue.acceptability import (
    acceptable_fixpoint,
    build_graph,
    rank_candidates,
)
from argdec_tools.argue.arguments import (
    ArgumentCon,
    ArgumentPro,
    Ranking,
    enumerate_con,
    enumerate_pro,
    has_multi_goal_conflict,
    literal_optimistic_ranking,
    optimistic_args,
    pessimistic_args,
    rank_optimistic,
    rank_pessimistic,
    strength_pro,
    undominated,
    weakness_con,
)
from argdec_tools.bases.instance import Instance
from argdec_tools.bases.scale import ScaleValue, format_exact, format_value
from argdec_tools.cli.constants import (
    ACCEPT_BANNER,
    CON_HEADER,
    DECISIONS_BANNER,
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXPLAIN_BANNER,
    MODE_BOTH,
    MODE_OPTIMISTIC,
    MODE_PESSIMISTIC,
    NOTES_BANNER,
    PIPELINE_HEADER,
    PRO_HEADER,
    RANKING_BANNER,
    ROUTE_ARGS,
    ROUTE_CUTS,
    ROUTE_SEMANTIC,
    ROUTES,
)
from argdec_tools.errors import (
    BackendLimit,
    DifferentialFailure,
    EnumerationLimit,
    NotNormalized,
)
from argdec_tools.evaluate.cuts import optimistic_cuts, pessimistic_cuts
from argdec_tools.evaluate.semantic import optimistic_semantic, pessimistic_semantic
from argdec_tools.logic.formula import to_text
from argdec_tools.logic.vocabulary import Decision
from argdec_tools.utils._config import EngineConfig

logger = logging.getLogger(__name__)

UPPER_BOUND_NOTE = "argumentative optimistic value is an upper bound"

_PRECONDITION_ERRORS = (NotNormalized, BackendLimit, EnumerationLimit)


@dataclass(frozen=True)
class ArgumentView:
    """A displayed argument with its strength (PRO) or weakness (CON)."""

    support: tuple[str, ...]
    consequences: tuple[str, ...]
    level: ScaleValue
    weight: ScaleValue

    @classmethod
    def of_pro(cls, a: ArgumentPro, inst: Instance) -> "ArgumentView":
        s = strength_pro(a, inst)
        return cls(_texts(a.support), _texts(a.consequences), s.level, s.weight)

    @classmethod
    def of_con(cls, a: ArgumentCon, inst: Instance) -> "ArgumentView":
        w = weakness_con(a, inst)
        return cls(_texts(a.support), _texts(a.consequences), w.level, w.weight)

    def to_json(self) -> dict:
        return {
            "support": list(self.support),
            "consequences": list(self.consequences),
            "level": format_exact(self.level),
            "weight": format_exact(self.weight),
        }

    def text(self) -> str:
        support = "{" + ", ".join(self.support) + "}"
        consequences = "{" + ", ".join(self.consequences) + "}"
        return (
            f"<{support}, {consequences}> "
            f"(level {format_value(self.level)}, weight {format_value(self.weight)})"
        )


def _texts(phis) -> tuple[str, ...]:
    return tuple(to_text(phi) for phi in phis)


@dataclass
class DecisionEntry:
    decision: Decision
    feasible: bool
    pessimistic: dict[str, ScaleValue] = field(default_factory=dict)
    optimistic: dict[str, ScaleValue] = field(default_factory=dict)
    pro: list[ArgumentView] = field(default_factory=list)
    con: list[ArgumentView] = field(default_factory=list)
    status: str | None = None
    score: ScaleValue | None = None

    def to_json(self) -> dict:
        return {
            "decision": self.decision.text(),
            "feasible": self.feasible,
            "pessimistic": {k: format_exact(v) for k, v in self.pessimistic.items()},
            "optimistic": {k: format_exact(v) for k, v in self.optimistic.items()},
            "pro": [view.to_json() for view in self.pro],
            "con": [view.to_json() for view in self.con],
            "status": self.status,
            "score": None if self.score is None else format_exact(self.score),
        }


def format_ranking(groups: list[list[str]]) -> str:
    return " > ".join("[" + ", ".join(group) + "]" for group in groups) or "(empty)"


@dataclass
class DecisionReport:
    """Everything a command prints; ``exit_code`` is what it returns."""

    pipeline: str
    decisions: list[DecisionEntry] = field(default_factory=list)
    ranking: list[list[str]] = field(default_factory=list)
    rankings: dict[str, list[list[str]]] = field(default_factory=dict)
    classes: dict[str, list[str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    banner: str = DECISIONS_BANNER
    show_decisions: bool = True
    exit_code: int = EXIT_OK

    def note(self, message: str):
        if message not in self.notes:
            logger.debug("note: %s", message)
            self.notes.append(message)

    def to_json(self) -> str:
        payload = {
            "pipeline": self.pipeline,
            "decisions": [entry.to_json() for entry in self.decisions],
            "ranking": self.ranking,
            "notes": self.notes,
        }
        if self.rankings:
            payload["rankings"] = self.rankings
        if self.classes:
            payload["classes"] = self.classes
        return json.dumps(payload, sort_keys=True, indent=2)

    def render(self) -> str:
        lines = [f"{PIPELINE_HEADER}{self.pipeline}"]
        if self.show_decisions:
            lines += ["", self.banner, ""]
        for entry in self.decisions if self.show_decisions else ():
            flag = "feasible" if entry.feasible else "infeasible"
            head = f"{entry.decision.text():12} {flag}"
            if entry.status is not None:
                head += f", {entry.status}"
            if entry.score is not None:
                head += f", score {format_value(entry.score)}"
            lines.append(head)
            for criterion, values in (
                (MODE_PESSIMISTIC, entry.pessimistic),
                (MODE_OPTIMISTIC, entry.optimistic),
            ):
                if values:
                    shown = "  ".join(
                        f"{route} {format_value(values[route])}" for route in ROUTES if route in values
                    )
                    lines.append(f"  {criterion:12} {shown}")
            lines += [f"  {PRO_HEADER}{view.text()}" for view in entry.pro]
            lines += [f"  {CON_HEADER}{view.text()}" for view in entry.con]
        for name, members in self.classes.items():
            lines += ["", f"{name} ({len(members)}):"]
            lines += [f"  {member}" for member in members]
        if self.ranking or self.rankings:
            lines += ["", RANKING_BANNER, ""]
            if self.rankings:
                lines += [f"{name}: {format_ranking(groups)}" for name, groups in self.rankings.items()]
            else:
                lines.append(format_ranking(self.ranking))
        if self.notes:
            lines += ["", NOTES_BANNER, ""]
            lines += [f"- {message}" for message in self.notes]
        return "\n".join(lines) + "\n"


# ── Evaluation ──


def _attempt(report: DecisionReport, label: str, compute: Callable[[], object]):
    try:
        return compute()
    except _PRECONDITION_ERRORS as error:
        report.note(f"{label} omitted: {error}")
        report.exit_code = max(report.exit_code, error.exit_code)
        return None


def _evaluate(
    report: DecisionReport,
    entry: DecisionEntry,
    inst: Instance,
    routes: tuple[tuple[str, Callable], ...],
    criterion: str,
    config: EngineConfig | None,
) -> dict[str, ScaleValue]:
    values = {}
    for route, compute in routes:
        value = _attempt(
            report,
            f"{criterion} {route} value",
            lambda compute=compute: compute(inst, entry.decision, config),
        )
        if value is not None:
            values[route] = value
    return values


def _check_pessimistic(d: Decision, values: dict[str, ScaleValue]):
    if len(set(values.values())) > 1:
        raise DifferentialFailure(f"Pessimistic routes disagree for {d}: {_show(values)}")


def _check_optimistic(
    report: DecisionReport,
    inst: Instance,
    d: Decision,
    values: dict[str, ScaleValue],
    config: EngineConfig | None,
):
    semantic, cuts, args = (values.get(r) for r in (ROUTE_SEMANTIC, ROUTE_CUTS, ROUTE_ARGS))
    if semantic is not None and cuts is not None and semantic != cuts:
        raise DifferentialFailure(f"Optimistic routes disagree for {d}: {_show(values)}")
    reference = cuts if cuts is not None else semantic
    if reference is None or args is None or args == reference:
        return
    if args < reference:
        raise DifferentialFailure(f"Optimistic argument value below the cut value for {d}")
    multi_goal = _attempt(
        report, "minimal-conflict check", lambda: has_multi_goal_conflict(inst, d, config)
    )
    if multi_goal:
        report.note(f"{d.text()}: {UPPER_BOUND_NOTE} (a conflict needs several goals jointly)")
    elif multi_goal is not None:
        raise DifferentialFailure(
            f"Optimistic argument value exceeds the cut value for {d} without a multi-goal conflict"
        )


def _show(values: dict[str, ScaleValue]) -> str:
    return ", ".join(f"{route} {format_value(v)}" for route, v in values.items())


def build_eval_report(
    inst: Instance, mode: str = MODE_BOTH, config: EngineConfig | None = None
) -> DecisionReport:
    """Utilities of every decision by all three routes under ``mode``.

    Routes whose preconditions fail are omitted with a note and set the
    exit code to 3; all decisions infeasible gives exit code 4.

    Raises:
        DifferentialFailure: If routes that must agree do not.
    """
    report = DecisionReport(inst.pipeline(config))
    kb_ok = inst.kb_consistent(config)
    if not kb_ok:
        report.note("K* is inconsistent: run 'accept' for the acceptability pipeline")
        report.exit_code = NotNormalized.exit_code
    for d in inst.decisions:
        entry = DecisionEntry(d, inst.feasible(d, config))
        report.decisions.append(entry)
        if not entry.feasible:
            if kb_ok:
                report.note(f"{d.text()} is inconsistent with K* and is not evaluated")
            continue
        if mode in (MODE_PESSIMISTIC, MODE_BOTH):
            entry.pessimistic = _evaluate(
                report,
                entry,
                inst,
                (
                    (ROUTE_SEMANTIC, pessimistic_semantic),
                    (ROUTE_CUTS, pessimistic_cuts),
                    (ROUTE_ARGS, pessimistic_args),
                ),
                MODE_PESSIMISTIC,
                config,
            )
            _check_pessimistic(d, entry.pessimistic)
        if mode in (MODE_OPTIMISTIC, MODE_BOTH):
            entry.optimistic = _evaluate(
                report,
                entry,
                inst,
                (
                    (ROUTE_SEMANTIC, optimistic_semantic),
                    (ROUTE_CUTS, optimistic_cuts),
                    (ROUTE_ARGS, optimistic_args),
                ),
                MODE_OPTIMISTIC,
                config,
            )
            _check_optimistic(report, inst, d, entry.optimistic, config)

    if kb_ok and not any(entry.feasible for entry in report.decisions):
        report.note("every decision is inconsistent with K*")
        report.exit_code = EXIT_INFEASIBLE
        return report
    if kb_ok:
        _add_rankings(report, inst, mode, config)
    return report


def _add_rankings(report: DecisionReport, inst: Instance, mode: str, config: EngineConfig | None):
    if mode in (MODE_PESSIMISTIC, MODE_BOTH):
        pessimistic = _attempt(report, "pessimistic ranking", lambda: rank_pessimistic(inst, config))
        if pessimistic is not None:
            report.rankings[MODE_PESSIMISTIC] = pessimistic.texts()
    if mode in (MODE_OPTIMISTIC, MODE_BOTH):
        optimistic = _attempt(report, "optimistic ranking", lambda: rank_optimistic(inst, config))
        literal = _attempt(
            report, "literal optimistic ranking", lambda: literal_optimistic_ranking(inst, config)
        )
        if optimistic is not None:
            report.rankings[MODE_OPTIMISTIC] = optimistic.texts()
            if literal is not None and literal.groups != optimistic.groups:
                report.note(
                    "preferring the highest CON weakness would rank "
                    f"{format_ranking(literal.texts())} instead of "
                    f"{format_ranking(optimistic.texts())}"
                )
    primary = MODE_OPTIMISTIC if mode == MODE_OPTIMISTIC else MODE_PESSIMISTIC
    report.ranking = report.rankings.get(primary, [])


# ── Explanation ──


def build_explain_report(
    inst: Instance, d: Decision, config: EngineConfig | None = None
) -> DecisionReport:
    """Undominated PRO and CON arguments of one decision."""
    report = DecisionReport(inst.pipeline(config), banner=EXPLAIN_BANNER)
    entry = DecisionEntry(d, inst.feasible(d, config))
    report.decisions.append(entry)
    if not entry.feasible:
        report.note(f"{d.text()} is inconsistent with K*")
    pros = _attempt(report, "PRO arguments", lambda: enumerate_pro(inst, d, config)) or ()
    cons = _attempt(report, "CON arguments", lambda: enumerate_con(inst, d, config)) or ()
    entry.pro = [ArgumentView.of_pro(a, inst) for a in undominated(pros, inst)]
    entry.con = [ArgumentView.of_con(a, inst) for a in undominated(cons, inst)]
    hidden = len(pros) + len(cons) - len(entry.pro) - len(entry.con)
    if hidden:
        report.note(f"{hidden} dominated argument(s) not shown")
    return report


# ── Acceptability ──


def build_accept_report(inst: Instance, config: EngineConfig | None = None) -> DecisionReport:
    """Acceptability fixpoint, decision statuses and the candidate ranking.

    Raises:
        DifferentialFailure: If on consistent knowledge the candidate ranking
            differs from the pessimistic ranking.
    """
    report = DecisionReport(inst.pipeline(config), banner=ACCEPT_BANNER)
    graph = build_graph(inst, config)
    result = acceptable_fixpoint(graph, inst)
    ranking = rank_candidates(result, inst)

    for d in inst.decisions:
        entry = DecisionEntry(
            d,
            inst.feasible(d, config),
            status=result.status[d],
            score=result.scores.get(d),
        )
        entry.pro = [
            ArgumentView.of_pro(a, inst)
            for a in graph.pros
            if a.decision == d and a in result.acceptable
        ]
        report.decisions.append(entry)
        alternative = result.alternative_scores.get(d)
        if alternative is not None and alternative != entry.score:
            report.note(
                f"{d.text()}: counting rejected PRO arguments would score {format_value(alternative)}"
            )
    report.classes = {
        "acceptable": [str(n) for n in graph.nodes if n in result.acceptable],
        "rejected": [str(n) for n in graph.nodes if n in result.rejected],
        "abeyance": [str(n) for n in graph.nodes if n in result.abeyance],
    }
    report.ranking = ranking.texts()
    if ranking.unranked:
        report.note(
            "not candidates: "
            + ", ".join(f"{d.text()} ({result.status[d]})" for d in ranking.unranked)
        )
    if inst.kb_consistent(config):
        _check_reduction(report, inst, ranking, config)
    return report


def _check_reduction(
    report: DecisionReport, inst: Instance, ranking: Ranking, config: EngineConfig | None
):
    feasible = [d for d in inst.decisions if inst.feasible(d, config)]
    pessimistic = rank_pessimistic(inst, config)
    if ranking.restricted(feasible).groups != pessimistic.restricted(feasible).groups:
        raise DifferentialFailure(
            f"Acceptability ranking {format_ranking(ranking.texts())} differs from "
            f"the pessimistic ranking {format_ranking(pessimistic.texts())}"
        )
    report.note("K* is consistent: acceptability reduces to the pessimistic argument ranking")
