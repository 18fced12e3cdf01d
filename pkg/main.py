# main.py - posray command-line entry point

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from config import Settings, load_settings
from injection import InjectionEngine, verify_all_pairs, verify_injection
from lediagram import (
    boundary_basis,
    build_le_graph,
    parse_diagram,
    random_diagram,
    validate,
)
from models.coloring import WalkResult
from models.errors import InvariantError
from models.positroid import Positroid
from positroid import enumerate_bases, minor
from rayleigh import balanced_check, rayleigh_delta_poly, sample_rayleigh, strong_probe
from report_format import FORMATS, CommandOutcome, format_diagram, render_report
from utils.json_diagram import convert_diagram_json, diagram_to_dict
from utils.json_positroid import (
    convert_positroid_json,
    looks_like_positroid,
    positroid_to_dict,
)
from utils.label_utils import parse_labels

logger = logging.getLogger("posray")


class UsageError(ValueError):
    """Command line does not match any subcommand grammar"""


class PosrayArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def setup_logging(verbose: bool = False, settings: Optional[Settings] = None):
    """Console handler on stderr (stdout carries the report), optional file log"""
    settings = settings or Settings()

    # Remove any existing handlers to prevent duplicates
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    detailed_formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s"
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    root_logger.addHandler(console_handler)

    if settings.log_file:
        file_handler = logging.FileHandler(settings.log_file, mode="w", encoding="utf-8")
        file_handler.setLevel(getattr(logging, settings.log_level, logging.DEBUG))
        file_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(file_handler)

    root_logger.setLevel(logging.DEBUG)
    for logger_name in [
        "posray",
        "lediagram",
        "positroid",
        "rayleigh",
        "injection",
        "flow_manager",
        "path_search",
    ]:
        component = logging.getLogger(logger_name)
        component.setLevel(logging.DEBUG)
        component.propagate = True


def build_parser() -> argparse.ArgumentParser:
    parser = PosrayArgumentParser(
        prog="posray",
        description="Positroids from Le-diagrams: bases, Rayleigh checks, injection",
    )
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--verbose", action="store_true", help="debug logs on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, source: bool = True):
        sub = commands.add_parser(name, help=help_text)
        if source:
            sub.add_argument("file", help="diagram JSON (or positroid JSON where noted)")
        # accepted after the subcommand as well
        sub.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
        sub.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
        return sub

    def pair(sub, required: bool = True):
        sub.add_argument("--e", type=int, required=required)
        sub.add_argument("--f", type=int, required=required)

    def sampling(sub, trials: int):
        sub.add_argument("--trials", type=int, default=trials)
        sub.add_argument("--seed", type=int, default=0)

    command("validate", "check a diagram's shape and Le-condition")
    command("bases", "enumerate the positroid's bases")

    sub = command("minor", "bases containing --contract and avoiding --delete")
    sub.add_argument("--contract", default="")
    sub.add_argument("--delete", default="")

    sub = command("rayleigh", "sampled exact Rayleigh check over all pairs")
    sampling(sub, trials=100)
    sub.add_argument("--allow-zero", action="store_true")

    sub = command("rayleigh-poly", "Rayleigh difference polynomial for one pair")
    pair(sub)

    for name, help_text in (
        ("inject", "run the marker walk on (B1, B2)"),
        ("reverse", "run the reverse walk on (B1', B2')"),
    ):
        sub = command(name, help_text)
        pair(sub)
        sub.add_argument("--b1", required=True)
        sub.add_argument("--b2", required=True)
        sub.add_argument("--trace", action="store_true")

    sub = command("verify-injection", "exhaustive injection check (all pairs by default)")
    pair(sub, required=False)
    sub.add_argument("--alternate", action="store_true")

    command("balanced", "counting Rayleigh inequality on every minor")

    sub = command("probe-strong", "derivative-form difference at signed inputs")
    pair(sub)
    sampling(sub, trials=100)

    sub = command("random", "seeded random Le-diagram", source=False)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--density", type=float, default=0.5)
    sub.add_argument("--seed", type=int, default=0)

    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e.strerror}")


def _load_positroid(args, settings: Settings) -> Positroid:
    """Positroid from a positroid file, or enumerated from a diagram file"""
    text = _read(args.file)
    if looks_like_positroid(text):
        return convert_positroid_json(text)
    graph = build_le_graph(parse_diagram(text))
    return enumerate_bases(graph, workers=settings.workers)


def _status(violations: list, payload: Dict) -> CommandOutcome:
    payload["violations"] = violations
    return CommandOutcome(1 if violations else 0, payload)


def cmd_validate(args, settings: Settings) -> CommandOutcome:
    diagram = convert_diagram_json(_read(args.file))
    violations = validate(diagram)
    outcome = _status(
        [violation.to_payload() for violation in violations],
        {
            "diagram": diagram_to_dict(diagram),
            "boundary_basis": sorted(boundary_basis(diagram)),
        },
    )
    outcome.sketch = format_diagram(diagram)
    return outcome


def cmd_bases(args, settings: Settings) -> CommandOutcome:
    positroid = _load_positroid(args, settings)
    payload = positroid_to_dict(positroid)
    payload["count"] = len(positroid)
    return CommandOutcome(0, payload)


def cmd_minor(args, settings: Settings) -> CommandOutcome:
    positroid = _load_positroid(args, settings)
    contract = parse_labels(args.contract, positroid.n)
    delete = parse_labels(args.delete, positroid.n)
    bases = minor(positroid, contract, delete)
    return CommandOutcome(
        0,
        {
            "contract": list(contract),
            "delete": list(delete),
            "bases": [list(basis) for basis in bases],
            "count": len(bases),
        },
    )


def cmd_rayleigh(args, settings: Settings) -> CommandOutcome:
    positroid = _load_positroid(args, settings)
    reports = sample_rayleigh(
        positroid, args.trials, args.seed, positive_only=not args.allow_zero
    )
    violations = [
        dict(violation.to_payload(), pair=list(report.pair))
        for report in reports
        for violation in report.violations
    ]
    return _status(
        violations,
        {
            "n": positroid.n,
            "seed": args.seed,
            "trials": args.trials,
            "reports": [report.to_payload() for report in reports],
        },
    )


def cmd_rayleigh_poly(args, settings: Settings) -> CommandOutcome:
    positroid = _load_positroid(args, settings)
    delta = rayleigh_delta_poly(positroid, args.e, args.f)
    terms = delta.to_payload()
    return _status(
        [term for term in terms if term["coefficient"] < 0],
        {
            "pair": [args.e, args.f],
            "terms": terms,
            "min_coefficient": delta.min_coefficient(),
        },
    )


def _walk_payload(result: WalkResult, with_trace: bool) -> Dict:
    payload = result.to_payload(with_trace=with_trace)
    payload["violations"] = []
    return payload


def cmd_inject(args, settings: Settings) -> CommandOutcome:
    graph = build_le_graph(parse_diagram(_read(args.file)))
    result = InjectionEngine(graph).run_injection(
        args.e, args.f, parse_labels(args.b1, graph.n), parse_labels(args.b2, graph.n)
    )
    return CommandOutcome(0, _walk_payload(result, args.trace))


def cmd_reverse(args, settings: Settings) -> CommandOutcome:
    graph = build_le_graph(parse_diagram(_read(args.file)))
    result = InjectionEngine(graph).reverse_bases(
        args.e, args.f, parse_labels(args.b1, graph.n), parse_labels(args.b2, graph.n)
    )
    return CommandOutcome(0, _walk_payload(result, args.trace))


def cmd_verify_injection(args, settings: Settings) -> CommandOutcome:
    if (args.e is None) != (args.f is None):
        raise UsageError("--e and --f must be given together")
    graph = build_le_graph(parse_diagram(_read(args.file)))
    positroid = enumerate_bases(graph, workers=settings.workers)

    if args.e is None:
        reports = verify_all_pairs(
            graph, positroid, alternate=args.alternate, workers=settings.workers
        )
    else:
        reports = [
            verify_injection(
                graph,
                positroid,
                args.e,
                args.f,
                alternate=args.alternate,
                workers=settings.workers,
            )
        ]

    violations = [
        dict(failure.to_payload(), pair=list(report.pair))
        for report in reports
        for failure in report.failures
    ]
    return _status(violations, {"reports": [report.to_payload() for report in reports]})


def cmd_balanced(args, settings: Settings) -> CommandOutcome:
    report = balanced_check(_load_positroid(args, settings))
    payload = report.to_payload()
    return _status(payload.pop("violations"), payload)


def cmd_probe_strong(args, settings: Settings) -> CommandOutcome:
    positroid = _load_positroid(args, settings)
    report = strong_probe(positroid, args.e, args.f, args.trials, args.seed)
    payload = report.to_payload()
    payload["seed"] = args.seed
    return _status(payload.pop("violations"), payload)


def cmd_random(args, settings: Settings) -> CommandOutcome:
    diagram = random_diagram(args.n, args.r, args.density, args.seed)
    outcome = CommandOutcome(0, diagram_to_dict(diagram))
    outcome.sketch = format_diagram(diagram)
    return outcome


COMMANDS: Dict[str, Callable] = {
    "validate": cmd_validate,
    "bases": cmd_bases,
    "minor": cmd_minor,
    "rayleigh": cmd_rayleigh,
    "rayleigh-poly": cmd_rayleigh_poly,
    "inject": cmd_inject,
    "reverse": cmd_reverse,
    "verify-injection": cmd_verify_injection,
    "balanced": cmd_balanced,
    "probe-strong": cmd_probe_strong,
    "random": cmd_random,
}


def dispatch(argv: List[str], settings: Optional[Settings] = None) -> CommandOutcome:
    """
    Parse argv and run one subcommand. Bad input of any kind becomes exit 2
    with an "error" payload; the caller prints the diagnostic.
    """
    settings = settings or Settings()
    try:
        args = build_parser().parse_args(argv)
        logger.info(f"=== POSRAY {args.command.upper()} ===")
        outcome = COMMANDS[args.command](args, settings)
        outcome.fmt = args.format
        return outcome
    except ValueError as e:
        logger.debug(f"Rejected input: {e}")
        return CommandOutcome(2, {"error": str(e)})


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"posray: error: {e}", file=sys.stderr)
        return 2
    setup_logging(verbose="--verbose" in argv, settings=settings)

    try:
        outcome = dispatch(argv, settings)
    except InvariantError as e:
        logger.error(f"Internal invariant broken: {str(e)}", exc_info=True)
        print(f"posray: internal error: {e}", file=sys.stderr)
        return 2
    if outcome.exit_code == 2:
        print(f"posray: error: {outcome.payload['error']}", file=sys.stderr)
        return 2

    sys.stdout.buffer.write(render_report(outcome, outcome.fmt))
    sys.stdout.flush()
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
