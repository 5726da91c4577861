"""
igs_cli.py - Command-line interface for PFSA induction and benchmarking

Commands:
    induce       Induce a PFSA from a dataset with the information-guided search
    exhaustive   Enumerate the whole construction tree (small datasets only)
    ktails       Reduce the dataset's prefix tree with k-tails
    gen          Generate a random PFSA
    sample       Sample a dataset from a machine until every arc is covered
    bench        Run seeded benchmark trials, or a sample-size sweep with --sweep
    export-dot   Write a machine (or result document) as Graphviz DOT

Usage examples:
    python scripts/cli/igs_cli.py induce --input datasets/worked_example.txt --mode prove --no-compat
    python scripts/cli/igs_cli.py gen --states 5 --tokens 3 --seed 7 --report yaml --output m.yaml
    python scripts/cli/igs_cli.py sample --input m.yaml --min-per-arc 4 --oversample 10 --output d.txt
    python scripts/cli/igs_cli.py bench --trials 25 --states 5 --tokens 3 --timeout-secs 60 --oversample 10
    python scripts/cli/igs_cli.py export-dot --input m.yaml

Defaults come from configs/yaml/presets/search_defaults.yaml; PFSA_<FLAG> environment
variables override them and flags override both.

Exit codes: 0 success, 1 usage error / missing file / malformed dataset or machine document,
2 runtime error.
"""
import argparse
import logging
import os
import sys
from datetime import datetime
from typing import Any, Dict, List, Mapping, Optional

from pydantic import ValidationError as ConfigValidationError

from pfsa.automaton.dataset import Dataset, format_dataset, read_dataset
from pfsa.automaton.machine import Pfsa, fit_counts
from pfsa.automaton.serialization import dump_machine_yaml, load_machine_yaml, to_dot
from pfsa.baselines.exhaustive import exhaustive_search
from pfsa.baselines.ktails import k_tails
from pfsa.bench.generator import gen_random_pfsa
from pfsa.bench.harness import run_benchmark, run_sample_size_sweep
from pfsa.bench.sampling import sample_sentences, sample_until_coverage
from pfsa.mml.criterion import get_criterion
from pfsa.search.igs import induce
from pfsa.search.options import InductionResult
from pfsa.utils.config import COMMANDS, RunConfig, resolve_config
from pfsa.utils.constants import DEFAULT_ENUMERATION_BUDGET
from pfsa.utils.errors import DatasetParseError, PfsaError, ValidationError
from pfsa.utils.logging import IgsLogger, configure_logging
from pfsa.utils.report import (
    format_bench_table,
    format_induction_report,
    format_machine_table,
    format_sweep_table,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    # every flag defaults to None so unset flags fall through to env and YAML defaults
    common = _Parser(add_help=False)
    common.add_argument("--input", help="Dataset file (induce/exhaustive/ktails) or machine YAML (sample/export-dot)")
    common.add_argument("--output", help="Write the report here instead of stdout")
    common.add_argument("--config", dest="config_file", help="YAML file replacing the packaged defaults")
    common.add_argument("--format", choices=["slash", "lines"], help="Dataset text format")
    common.add_argument("--token-mode", choices=["words", "chars"], help="Tokens of 'lines' datasets")
    common.add_argument("--report", choices=["text", "yaml", "dot"], help="Output format")
    common.add_argument("--seed", type=int, help="Seed of every random choice")
    common.add_argument("--criterion", help="MML criterion name")
    common.add_argument("--timings", action="store_true", default=None,
                        help="Include wall-clock times in machine-readable output")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("--log-file", help="Also log to this file")

    search = _Parser(add_help=False)
    search.add_argument("--mode", choices=["prove", "greedy", "stochastic"], help="Node selection mode")
    search.add_argument("--compat", action=argparse.BooleanOptionalAction, default=None,
                        help="Distribution compatibility culling")
    search.add_argument("--node-cap", type=int, help="Live construction-tree nodes before culling")
    search.add_argument("--expansion-order", choices=["most-transitions", "fifo"], help="Dangling arc choice")
    search.add_argument("--mu-table", help="Tiered probabilities, e.g. 1.0:0.50,0.8:0.35,0.5:0.10,0.0:0.05")
    search.add_argument("--switch-ratio", help="Estimate:partial selections, e.g. 3:1")
    search.add_argument("--budget-nodes", type=int, help="Maximum nodes examined")
    search.add_argument("--timeout-secs", type=float, help="Wall-clock budget in seconds")

    generator = _Parser(add_help=False)
    generator.add_argument("--states", type=int, help="States of generated machines")
    generator.add_argument("--tokens", type=int, help="Tokens of generated machines")
    generator.add_argument("--density", type=float, help="Mean token arcs per state")
    generator.add_argument("--delimiter-rate", type=float, help="Chance of an extra delimiter arc per state")

    sampling = _Parser(add_help=False)
    sampling.add_argument("--min-per-arc", type=int, help="Traversals every arc needs before sampling stops")
    sampling.add_argument("--oversample", type=float, help="Final sentence count as a multiple of coverage")

    session = _Parser(add_help=False)
    session.add_argument("--run-log", nargs="?", const="outputs", metavar="DIR",
                         help="Write a DEBUG session log to DIR/<command>/<session>/igs.log (DIR: outputs)")

    parser = _Parser(prog="igs_cli", description="PFSA induction by minimum message length.")
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("induce", parents=[common, search, session], help="Induce a PFSA from a dataset")
    sub.add_parser("exhaustive", parents=[common, search], help="Enumerate the construction tree")
    sp_ktails = sub.add_parser("ktails", parents=[common], help="k-tails baseline")
    sp_ktails.add_argument("--k", type=int, help="Tail length")
    sub.add_parser("gen", parents=[common, generator], help="Generate a random PFSA")
    sp_sample = sub.add_parser("sample", parents=[common, sampling], help="Sample a dataset from a machine")
    sp_sample.add_argument("--sentences", type=int, help="Fixed sentence count instead of coverage sampling")
    sp_bench = sub.add_parser("bench", parents=[common, search, generator, sampling, session], help="Benchmark trials")
    sp_bench.add_argument("--trials", type=int, help="Number of trials")
    sp_bench.add_argument("--algorithms", help="Comma list of igs, ktails, null, exhaustive")
    sp_bench.add_argument("--k", type=int, help="Tail length for the ktails algorithm")
    sp_bench.add_argument("--sweep", help="Coverage multiples for a sample-size sweep, e.g. 1,2,4,8")
    sp_bench.add_argument("--threads", type=int, help="Worker threads running trials side by side")
    sub.add_parser("export-dot", parents=[common], help="Write a machine as DOT")
    return parser


def _require_input(cfg: RunConfig) -> str:
    if not cfg.input:
        raise UsageError(f"{cfg.command} needs --input")
    if not os.path.exists(cfg.input):
        raise FileNotFoundError(f"input file not found: {cfg.input}")
    return cfg.input


def _read_dataset(cfg: RunConfig) -> Dataset:
    return read_dataset(_require_input(cfg), fmt=cfg.format, tokens=cfg.token_mode)


def _render_result(result: InductionResult, cfg: RunConfig) -> str:
    if cfg.report == "yaml":
        return result.to_yaml(include_timing=cfg.timings)
    if cfg.report == "dot":
        return to_dot(result.machine)
    return format_induction_report(result)


def _render_machine(machine: Pfsa, cfg: RunConfig) -> str:
    if cfg.report == "yaml":
        return dump_machine_yaml(machine)
    if cfg.report == "dot":
        return to_dot(machine)
    return format_machine_table(machine) + "\n"


def cmd_induce(cfg: RunConfig) -> str:
    dataset = _read_dataset(cfg)
    return _render_result(induce(dataset, cfg.search_options()), cfg)


def cmd_exhaustive(cfg: RunConfig) -> str:
    dataset = _read_dataset(cfg)
    budget = cfg.budget_nodes if cfg.budget_nodes is not None else DEFAULT_ENUMERATION_BUDGET
    return _render_result(exhaustive_search(dataset, node_budget=budget, criterion_name=cfg.criterion), cfg)


def cmd_ktails(cfg: RunConfig) -> str:
    dataset = _read_dataset(cfg)
    machine = fit_counts(k_tails(dataset, cfg.k), dataset)
    result = InductionResult(
        machine=machine,
        mml=get_criterion(cfg.criterion).score(machine, dataset),
        nodes_examined=0,
        nodes_created=0,
        completed_pfsa_count=1,
        proven_optimal=False,
        algorithm="ktails",
    )
    return _render_result(result, cfg)


def cmd_gen(cfg: RunConfig) -> str:
    return _render_machine(gen_random_pfsa(cfg.generator_params()), cfg)


def cmd_sample(cfg: RunConfig) -> str:
    machine = load_machine_yaml(_require_input(cfg))
    if cfg.sentences is not None:
        dataset = sample_sentences(machine, cfg.sentences, cfg.seed)
    else:
        dataset = sample_until_coverage(machine, cfg.seed, cfg.min_per_arc, cfg.oversample)
    return format_dataset(dataset, cfg.format)


def cmd_bench(cfg: RunConfig) -> str:
    opts = cfg.search_options()
    multipliers = cfg.sweep_multipliers()
    if multipliers:
        sweep = run_sample_size_sweep(cfg.generator_params(), multipliers, opts, cfg.seed, cfg.min_per_arc)
        if cfg.report == "yaml":
            return sweep.to_yaml(include_timing=cfg.timings)
        return format_sweep_table(sweep, include_timing=cfg.timings)
    report = run_benchmark(cfg.trials, cfg.generator_params(), cfg.algorithms, opts, cfg.seed,
                           cfg.min_per_arc, cfg.oversample, cfg.k, cfg.threads)
    if cfg.report == "yaml":
        return report.to_yaml(include_timing=cfg.timings)
    return format_bench_table(report, include_timing=cfg.timings)


def cmd_export_dot(cfg: RunConfig) -> str:
    return to_dot(load_machine_yaml(_require_input(cfg)))


HANDLERS = {
    "induce": cmd_induce,
    "exhaustive": cmd_exhaustive,
    "ktails": cmd_ktails,
    "gen": cmd_gen,
    "sample": cmd_sample,
    "bench": cmd_bench,
    "export-dot": cmd_export_dot,
}


def _flags(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"command", "config_file"}
    return {key: value for key, value in vars(args).items() if key not in skip}


def _open_run_log(cfg: RunConfig) -> Optional[IgsLogger]:
    if not cfg.run_log:
        return None
    session_datetime = datetime.now().strftime('%Y-%m-%d_%H%M%S')
    run_log = IgsLogger(run_name=cfg.command, session_datetime=session_datetime, root=cfg.run_log,
                        to_console=False)
    run_log.info(f"{cfg.command} started", extra=cfg.model_dump(exclude_none=True))
    return run_log


def _write(text: str, path: Optional[str]):
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[List[str]] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    """
    Execute one command.

    Returns:
        0 on success, 1 on usage errors, missing files and malformed input documents, 2 on other
        runtime errors (e.g. no model within the budget).
    """
    try:
        args = build_parser().parse_args(argv)
        if args.command not in COMMANDS:
            raise UsageError(f"choose a command: {', '.join(COMMANDS)}")
        cfg = resolve_config(args.command, _flags(args), environ=environ, defaults_path=args.config_file)
        configure_logging(cfg.log_level, cfg.log_file)
        logger.debug(f"running {cfg.command} with {cfg.model_dump(exclude_none=True)}")
        run_log = _open_run_log(cfg)
        try:
            _write(HANDLERS[cfg.command](cfg), cfg.output)
            if run_log is not None:
                run_log.info(f"{cfg.command} finished", extra={"output": cfg.output or "stdout"})
        except PfsaError as exc:
            if run_log is not None:
                run_log.error(f"{cfg.command} failed: {exc}")
            raise
        finally:
            if run_log is not None:
                run_log.close()
        return EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigValidationError as exc:
        problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors())
        print(f"usage error: {problems}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DatasetParseError as exc:
        print(f"error: malformed dataset: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: malformed document: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PfsaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
