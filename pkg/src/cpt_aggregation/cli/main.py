"""Command-line interface: generate, solve, eval, matrix and report.

Exit codes: 0 success, 1 invalid input, 2 I/O failure, 3 resource guard exceeded.
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional

from cpt_aggregation import __version__, config
from cpt_aggregation.algorithms import ALGORITHMS
from cpt_aggregation.analysis.experiments import (
    copy_parent_sweep,
    random_sweep,
    run_sweep,
    symmetric_sweep,
    tkn_sweep,
)
from cpt_aggregation.api import AggregationAPI, AsyncAggregationAPI
from cpt_aggregation.cli.exports import render_matrix, render_solve_report, write_bytes, write_json, write_report
from cpt_aggregation.cli.progress import SweepProgress
from cpt_aggregation.errors import AggregationError, InstanceFormatError, ResourceLimitError, UniverseMismatchError
from cpt_aggregation.generators import FAMILIES, generate_family, make_family_spec
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance, parse_instance, serialize_instance
from cpt_aggregation.model.schema import cpt_from_document, load_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_RESOURCE = 3


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the invalid-input exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def configure_logging(level: str, log_file: str = "") -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level.upper(), format=config.LOG_FORMAT, handlers=handlers, force=True)


def parse_attribute_list(text: str, width: int) -> AttributeSet:
    """Parse ``"0,2"`` into an AttributeSet; the empty string is the empty set.

    Raises:
        InstanceFormatError: If an entry is not an integer or is out of range
    """
    entries = [entry.strip() for entry in text.split(",") if entry.strip()]
    try:
        indices = [int(entry) for entry in entries]
    except ValueError as e:
        raise InstanceFormatError(f"Attribute list must be comma-separated integers, got '{text}'", e) from e
    return AttributeSet.from_indices(indices, width)


def read_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_bytes())


def read_candidate(path: str, instance: Instance) -> Cpt:
    """Read a candidate CPT from a bare CptObj file or a single-CPT instance file."""
    text = Path(path).read_bytes()
    data = load_json(text)
    if isinstance(data, dict) and "cpts" in data:
        wrapper = parse_instance(text)
        if wrapper.t != 1:
            raise InstanceFormatError(f"Candidate file must hold exactly one CPT, found {wrapper.t}")
        if wrapper.n != instance.n:
            raise UniverseMismatchError(f"Candidate over n={wrapper.n} does not match instance n={instance.n}")
        return wrapper[0]
    return cpt_from_document(data, instance.n)


def cmd_generate(args: argparse.Namespace) -> int:
    fields = {
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "t": args.t,
        "max_parents": args.max_parents,
        "seed": args.seed,
        "parent_size": args.parent_size,
    }
    spec = make_family_spec(**{name: value for name, value in fields.items() if value is not None})
    instance = generate_family(spec)
    write_bytes(args.output, serialize_instance(instance))
    print(f"t={instance.t} n={instance.n} rules={instance.rule_count}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    instance = read_instance(args.input)
    parents = parse_attribute_list(args.parents, instance.width) if args.parents is not None else None
    pool = parse_attribute_list(args.pool, instance.width) if args.pool is not None else None
    if args.algorithm == "fixed-parent" and parents is None:
        raise InstanceFormatError("Algorithm 'fixed-parent' requires --parents")

    api = AggregationAPI(max_parent_bits=args.max_parent_bits, max_matrix_n=args.max_matrix_n)
    report = api.solve(instance, args.algorithm, parents=parents, pool=pool)
    if args.output:
        write_json(args.output, report.to_dict())
    print(render_solve_report(report))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    instance = read_instance(args.input)
    candidate = read_candidate(args.cpt, instance)
    value, per_input = AggregationAPI().evaluate(instance, candidate)
    print(f"objective: {value}")
    print(f"per_input: {' '.join(str(d) for d in per_input)}")
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    instance = read_instance(args.input)
    matrix = AggregationAPI(max_matrix_n=args.max_matrix_n).matrix(instance)
    print(render_matrix(matrix))
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    if args.family == "tkn":
        specs = tkn_sweep(range(args.n_min or 3, (args.n_max or 7) + 1))
    elif args.family == "symmetric-disjoint":
        specs = symmetric_sweep(
            range(args.t_min, args.t_max + 1), range(args.n_min or 4, (args.n_max or 8) + 1), args.parent_size
        )
    elif args.family == "copy-parent":
        specs = copy_parent_sweep(range(args.n_min or 4, (args.n_max or 8) + 1))
    else:
        specs = random_sweep(args.count, args.n, args.t, args.max_parents, args.seed)

    tracker = SweepProgress(args.family)
    tracker.add_listener(lambda snapshot: logger.info(snapshot.describe()))
    tracker.start(len(specs))
    api = AsyncAggregationAPI(max_workers=args.workers, max_parent_bits=args.max_parent_bits)

    rows = asyncio.run(run_sweep(specs, api, tracker.advance))
    asyncio.run(write_report(args.output, rows))
    for row in rows:
        print(row.summary())
    tracker.finish(len(rows), args.output)
    return EXIT_OK


def build_parser() -> ArgumentParser:
    """Build the argument parser with all subcommands."""
    common = ArgumentParser(add_help=False)
    common.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level")
    common.add_argument("--log-file", default=config.LOG_FILE, help="also log to this file")

    # each subcommand only takes the guards it enforces
    matrix_guard = ArgumentParser(add_help=False)
    matrix_guard.add_argument("--max-matrix-n", type=int, default=None, help="vote-matrix guard on n")
    parent_guard = ArgumentParser(add_help=False)
    parent_guard.add_argument("--max-parent-bits", type=int, default=None, help="fixed-parent-set guard on |p|")

    parser = ArgumentParser(prog="cpt-aggregate", description="Aggregate conditional preference tables")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", parents=[common], help="generate an instance family member")
    generate.add_argument("--family", required=True, choices=FAMILIES)
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--k", type=int)
    generate.add_argument("--t", type=int)
    generate.add_argument("--max-parents", type=int)
    generate.add_argument("--seed", type=int)
    generate.add_argument("--parent-size", type=int)
    generate.add_argument("-o", "--output", required=True)
    generate.set_defaults(handler=cmd_generate)

    solve = subparsers.add_parser(
        "solve", parents=[common, matrix_guard, parent_guard], help="run an aggregation algorithm"
    )
    solve.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    solve.add_argument("-i", "--input", required=True)
    solve.add_argument("--parents", help="comma-separated parent set for fixed-parent")
    solve.add_argument("--pool", help="comma-separated parent pool for exhaustive")
    solve.add_argument("-o", "--output", help="write the SolveReport JSON here")
    solve.set_defaults(handler=cmd_solve)

    evaluate = subparsers.add_parser("eval", parents=[common], help="evaluate a candidate CPT")
    evaluate.add_argument("-i", "--input", required=True)
    evaluate.add_argument("--cpt", required=True, help="CptObj file or single-CPT instance file")
    evaluate.set_defaults(handler=cmd_eval)

    matrix = subparsers.add_parser("matrix", parents=[common, matrix_guard], help="print the vote matrix")
    matrix.add_argument("-i", "--input", required=True)
    matrix.set_defaults(handler=cmd_matrix)

    report = subparsers.add_parser(
        "report", parents=[common, parent_guard], help="sweep a family and write a CSV report"
    )
    report.add_argument("--family", required=True, choices=FAMILIES)
    report.add_argument("--n-min", type=int)
    report.add_argument("--n-max", type=int)
    report.add_argument("--t-min", type=int, default=3)
    report.add_argument("--t-max", type=int, default=5)
    report.add_argument("--parent-size", type=int, default=1)
    report.add_argument("--n", type=int, default=4, help="attribute count (random)")
    report.add_argument("--t", type=int, default=3, help="tuple size (random)")
    report.add_argument("--max-parents", type=int, default=2)
    report.add_argument("--count", type=int, default=10)
    report.add_argument("--seed", type=int, default=0, help="first seed (random)")
    report.add_argument("--workers", type=int, default=None)
    report.add_argument("-o", "--output", required=True)
    report.set_defaults(handler=cmd_report)

    return parser


def run(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Run a subcommand and map failures onto exit codes."""
    try:
        return handler(args)
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (AggregationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        configure_logging(args.log_level, args.log_file)
    except (ValueError, OSError) as e:
        print(f"error: cannot configure logging: {e}", file=sys.stderr)
        return EXIT_INVALID
    return run(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
