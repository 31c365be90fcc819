"""Differential harness

Runs every evaluation route on each instance and compares them:

* consistent knowledge: semantic = cuts for both criteria, args = cuts for
  the pessimistic one, args >= cuts for the optimistic one with equality
  unless a conflict needs several goals jointly, grid sufficiency, and the
  acceptability ranking against the pessimistic ranking;
* inconsistent knowledge: the fixpoint classes partition the nodes and the
  iteration agrees with the least fixpoint within the node count.

Offending instances are written to a replay directory; instances beyond the
enumeration bounds are counted as skipped.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from argdec_tools.argue.acceptability import acceptable_fixpoint, build_graph, rank_candidates
from argdec_tools.argue.arguments import (
    has_multi_goal_conflict,
    optimistic_args,
    pessimistic_args,
    rank_pessimistic,
)
from argdec_tools.bases.instance import Instance, dump_instance
from argdec_tools.bases.scale import format_exact
from argdec_tools.cli.constants import REPLAY_SUFFIX
from argdec_tools.errors import BackendLimit, EnumerationLimit
from argdec_tools.evaluate.cuts import grid_is_sufficient, optimistic_cuts, pessimistic_cuts
from argdec_tools.evaluate.semantic import optimistic_semantic, pessimistic_semantic
from argdec_tools.utils._config import EngineConfig

logger = logging.getLogger(__name__)


@dataclass
class CheckSummary:
    rows: list[dict] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    replayed: list[Path] = field(default_factory=list)
    instances: int = 0

    @property
    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows)

    def counts(self) -> dict[str, int]:
        frame = self.frame
        checked = frame[frame["kind"] == "decision"] if len(frame) else frame

        def total(column: str, rows: pd.DataFrame = checked) -> int:
            return int(rows[column].eq(True).sum()) if column in rows else 0

        return {
            "instances": self.instances,
            "decisions": len(checked),
            "feasible": total("feasible"),
            "upper_bound": total("upper_bound"),
            "skipped": total("skipped", frame),
            "fixpoints": int((frame["kind"] == "fixpoint").sum()) if len(frame) else 0,
            "violations": len(self.violations),
        }


_LIMITS = (BackendLimit, EnumerationLimit)


def _check_decisions(inst: Instance, config: EngineConfig | None) -> tuple[list[dict], list[str]]:
    rows, violations = [], []
    normalized = inst.goals_consistent(config)
    for d in inst.decisions:
        row = {
            "kind": "decision",
            "decision": d.text(),
            "feasible": inst.feasible(d, config),
            "skipped": False,
            "upper_bound": False,
        }
        rows.append(row)
        if not row["feasible"] or not normalized:
            row["skipped"] = not normalized
            continue
        try:
            values = {
                "pessimistic_semantic": pessimistic_semantic(inst, d, config),
                "pessimistic_cuts": pessimistic_cuts(inst, d, config),
                "pessimistic_args": pessimistic_args(inst, d, config),
                "optimistic_semantic": optimistic_semantic(inst, d, config),
                "optimistic_cuts": optimistic_cuts(inst, d, config),
                "optimistic_args": optimistic_args(inst, d, config),
            }
            sufficient = grid_is_sufficient(inst, d, config)
            multi_goal = values["optimistic_args"] > values["optimistic_cuts"] and (
                has_multi_goal_conflict(inst, d, config)
            )
        except _LIMITS as error:
            logger.warning("%s: skipped (%s)", d, error)
            row["skipped"] = True
            continue
        row.update({k: format_exact(v) for k, v in values.items()})
        row["grid_ok"] = sufficient

        if len({values[f"pessimistic_{r}"] for r in ("semantic", "cuts", "args")}) > 1:
            violations.append(f"{d.text()}: pessimistic routes disagree")
        if values["optimistic_semantic"] != values["optimistic_cuts"]:
            violations.append(f"{d.text()}: optimistic semantic and cut values differ")
        if values["optimistic_args"] < values["optimistic_cuts"]:
            violations.append(f"{d.text()}: optimistic argument value below the cut value")
        elif values["optimistic_args"] > values["optimistic_cuts"]:
            if multi_goal:
                row["upper_bound"] = True
            else:
                violations.append(
                    f"{d.text()}: optimistic argument value above the cut value "
                    "without a multi-goal conflict"
                )
        if not sufficient:
            violations.append(f"{d.text()}: midpoint evaluation changed a utility")

    feasible = [d for d in inst.decisions if inst.feasible(d, config)]
    if feasible:
        try:
            accepted = rank_candidates(acceptable_fixpoint(build_graph(inst, config), inst), inst)
            pessimistic = rank_pessimistic(inst, config)
        except _LIMITS as error:
            logger.warning("acceptability ranking skipped (%s)", error)
            return rows, violations
        if accepted.restricted(feasible).groups != pessimistic.restricted(feasible).groups:
            violations.append("acceptability ranking differs from the pessimistic ranking")
    return rows, violations


def _check_fixpoint(inst: Instance, config: EngineConfig | None) -> tuple[list[dict], list[str]]:
    try:
        graph = build_graph(inst, config)
    except _LIMITS as error:
        logger.warning("fixpoint skipped (%s)", error)
        return [{"kind": "fixpoint", "skipped": True}], []
    try:
        result = acceptable_fixpoint(graph, inst)
    except AssertionError as error:
        return [{"kind": "fixpoint", "nodes": len(graph.nodes)}], [f"fixpoint: {error}"]
    violations = []
    nodes = frozenset(graph.nodes)
    if result.acceptable & result.rejected:
        violations.append("fixpoint: acceptable and rejected overlap")
    if result.acceptable | result.rejected | result.abeyance != nodes:
        violations.append("fixpoint: classes do not cover every node")
    row = {
        "kind": "fixpoint",
        "nodes": len(graph.nodes),
        "iterations": result.iterations,
        "acceptable": len(result.acceptable),
        "rejected": len(result.rejected),
        "abeyance": len(result.abeyance),
        "skipped": False,
    }
    return [row], violations


def check_instance(
    inst: Instance, config: EngineConfig | None = None
) -> tuple[list[dict], list[str]]:
    """Rows of observed values and the violations found on one instance."""
    if inst.kb_consistent(config):
        return _check_decisions(inst, config)
    return _check_fixpoint(inst, config)


def run_check(
    instances: Iterable[tuple[str, Instance]],
    config: EngineConfig | None = None,
    replay_dir: Path | None = None,
    total: int | None = None,
    progress: bool = True,
) -> CheckSummary:
    """Check every named instance, writing offenders under ``replay_dir``.

    Args:
        instances: ``(name, instance)`` pairs.
        config: Backend selection and bounds.
        replay_dir: Directory for offending instances; nothing is written
            when None.
        total: Number of instances, for the progress bar.
        progress: Show a progress bar on stderr.
    """
    summary = CheckSummary()
    for name, inst in tqdm(instances, total=total, disable=not progress, desc="check"):
        summary.instances += 1
        rows, violations = check_instance(inst, config)
        summary.rows += [{"instance": name, **row} for row in rows]
        if not violations:
            continue
        summary.violations += [f"{name}: {message}" for message in violations]
        for message in violations:
            logger.error("%s: %s", name, message)
        if replay_dir is not None:
            replay_dir.mkdir(parents=True, exist_ok=True)
            path = replay_dir / f"{name}{REPLAY_SUFFIX}"
            path.write_text(dump_instance(inst))
            summary.replayed.append(path)
    return summary
