import argparse
import itertools
import logging
from pathlib import Path

from argdec_tools.bases.instance import Instance, dump_instance, load_instance
from argdec_tools.cli.check import run_check
from argdec_tools.cli.constants import (
    CHECK_BANNER,
    EXIT_OK,
    MODE_BOTH,
    MODES,
    RANKING_BANNER,
    REPLAY_DIR,
)
from argdec_tools.cli.report import (
    DecisionReport,
    build_accept_report,
    build_eval_report,
    build_explain_report,
)
from argdec_tools.errors import DifferentialFailure, EngineError, ParseError
from argdec_tools.generate.generator import generate, generate_many, parse_gen_spec
from argdec_tools.utils._config import EngineConfig
from argdec_tools.utils.constants import (
    BACKEND_AUTO,
    BACKENDS,
    CONFLICT_LIMIT,
    MODELS_LIMIT,
    SUBSET_LIMIT,
    TRUTH_TABLE_LIMIT,
)

logger = logging.getLogger("argdec_tools")


def _gen_settings(text: str):
    try:
        return parse_gen_spec(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse Arguments for the tool

    Args:
        argv (Optional[List[str]]): Command line without the program name;
            ``sys.argv`` when None.

    Returns:
        argparse.Namespace: The arguments, with ``command`` naming the
        subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--backend",
        choices=BACKENDS,
        default=BACKEND_AUTO,
        help="Entailment backend; auto uses truth tables up to --truth-table-limit atoms",
    )
    common.add_argument(
        "--truth-table-limit",
        type=int,
        default=TRUTH_TABLE_LIMIT,
        help="Largest vocabulary decided by truth tables",
    )
    common.add_argument(
        "--models-limit",
        type=int,
        default=MODELS_LIMIT,
        help="Largest vocabulary enumerated by the semantic route",
    )
    common.add_argument(
        "--subset-limit",
        type=int,
        default=SUBSET_LIMIT,
        help="Largest knowledge base whose subsets are enumerated for arguments",
    )
    common.add_argument(
        "--conflict-limit",
        type=int,
        default=CONFLICT_LIMIT,
        help="Largest formula set searched for minimal conflicts",
    )
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Print the report as JSON")

    parser = argparse.ArgumentParser(
        prog="argdec",
        description="Evaluates, ranks and explains decisions against a possibilistic knowledge base and a prioritised goal base",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("eval", "Pessimistic and optimistic utilities of every decision by all three routes"),
        ("rank", "Ordered groups of decisions"),
    ):
        command = commands.add_parser(name, parents=[common, output], help=text)
        command.add_argument("file", type=Path, help="Instance file")
        command.add_argument("--mode", choices=MODES, default=MODE_BOTH, help="Criterion")

    explain = commands.add_parser(
        "explain", parents=[common, output], help="Undominated PRO and CON arguments of a decision"
    )
    explain.add_argument("file", type=Path, help="Instance file")
    explain.add_argument("--decision", required=True, help="Decision, e.g. 'u' or '~u'")

    accept = commands.add_parser(
        "accept", parents=[common, output], help="Acceptability fixpoint for inconsistent knowledge"
    )
    accept.add_argument("file", type=Path, help="Instance file")

    check = commands.add_parser("check", parents=[common], help="Cross-check the evaluation routes")
    check.add_argument("files", type=Path, nargs="*", help="Instance files")
    check.add_argument(
        "--gen",
        type=_gen_settings,
        default=None,
        help='Generated corpus, e.g. "seed=1,trials=500,stateAtoms=6,consistentK,consistentG"',
    )
    check.add_argument(
        "--replay-dir", type=Path, default=Path(REPLAY_DIR), help="Where offending instances go"
    )
    check.add_argument("--no-progress", action="store_true", help="Hide the progress bar")

    gen = commands.add_parser("gen", parents=[common], help="Write a generated instance")
    gen.add_argument(
        "settings", type=_gen_settings, help='Generator settings, e.g. "seed=7,stateAtoms=5"'
    )
    gen.add_argument("--output", "-o", type=Path, default=None, help="Output file; stdout if absent")

    args = parser.parse_args(argv)
    if args.command == "check" and not args.files and args.gen is None:
        parser.error("check needs instance files or --gen")
    try:
        args.config = EngineConfig(
            backend=args.backend,
            truth_table_limit=args.truth_table_limit,
            models_limit=args.models_limit,
            subset_limit=args.subset_limit,
            conflict_limit=args.conflict_limit,
        )
    except ValueError as error:
        parser.error(str(error))
    return args


def _load(path: Path, config: EngineConfig) -> Instance:
    try:
        text = path.read_text()
    except OSError as error:
        raise ParseError(f"cannot read {path}: {error.strerror}") from error
    return load_instance(text, config)


def _emit(report: DecisionReport, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(report.render(), end="")
    return report.exit_code


def cmd_eval(args: argparse.Namespace) -> int:
    inst = _load(args.file, args.config)
    return _emit(build_eval_report(inst, args.mode, args.config), args.json)


def cmd_rank(args: argparse.Namespace) -> int:
    inst = _load(args.file, args.config)
    report = build_eval_report(inst, args.mode, args.config)
    report.show_decisions = False
    report.banner = RANKING_BANNER
    return _emit(report, args.json)


def cmd_explain(args: argparse.Namespace) -> int:
    inst = _load(args.file, args.config)
    d = inst.decision(args.decision)
    return _emit(build_explain_report(inst, d, args.config), args.json)


def cmd_accept(args: argparse.Namespace) -> int:
    inst = _load(args.file, args.config)
    return _emit(build_accept_report(inst, args.config), args.json)


def cmd_check(args: argparse.Namespace) -> int:
    instances = [(path.stem, _load(path, args.config)) for path in args.files]
    total = len(instances)
    if args.gen is not None:
        cfg, trials = args.gen
        generated = (
            (f"seed-{cfg.seed + i}", inst) for i, inst in enumerate(generate_many(cfg, trials))
        )
        instances = itertools.chain(instances, generated)
        total += trials
    summary = run_check(
        instances, args.config, args.replay_dir, total=total, progress=not args.no_progress
    )

    print(CHECK_BANNER, "\n")
    for name, count in summary.counts().items():
        print(f"{name:12} {count}")
    if args.verbose and summary.rows:
        print()
        print(summary.frame.to_string(index=False))
    if summary.violations:
        print()
        for message in summary.violations:
            print(f"- {message}")
        for path in summary.replayed:
            print(f"replay: {path}")
        return DifferentialFailure.exit_code
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    cfg, _ = args.settings
    text = dump_instance(generate(cfg))
    if args.output is None:
        print(text, end="")
    else:
        args.output.write_text(text)
        logger.info("Wrote %s", args.output)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "rank": cmd_rank,
    "explain": cmd_explain,
    "accept": cmd_accept,
    "check": cmd_check,
    "gen": cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="[%(levelname)s]: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except EngineError as error:
        logger.error("%s", error)
        return error.exit_code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
