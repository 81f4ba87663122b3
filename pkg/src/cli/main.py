"""Command-line entry point: simulate, oracle, generate, verify, render."""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, Union

import pandas as pd
import yaml
from loguru import logger

from ..automata.solvers import SOLVERS, get_solver
from ..bounds.family import (
    arrangement_at,
    arrangement_count,
    block_family_instance,
    choose_family_params,
    closed_form_roundtrip,
    sample_arrangement_indices,
)
from ..bounds.signals import (
    instance_count,
    mu_reference,
    round_trip,
    signal_initial,
    signal_update,
    uniform_transfer_time,
)
from ..errors import (
    BudgetExceededError,
    CollectionShortfallError,
    HorizonExceededError,
    InstanceError,
    MsfsspError,
)
from ..monitoring import log_sync_report, setup_logger
from ..msca.instances import InstanceDocument, read_instance, write_instance
from ..msca.kernel import PeriodSet, run_trajectory
from ..settings import get_settings
from ..wrapper.runner import SyncReport, simulate_wrapper
from .render import TraceDocument, host_glyph, read_trace, render_svg, render_text, write_trace
from .sweep import SweepRecord, format_records, run_sweep

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

PathLike = Union[str, Path]


def parse_period_set(text: str) -> PeriodSet:
    """'2,3' -> PeriodSet((2, 3))."""
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as e:
        raise InstanceError(f"period set must be comma-separated integers, got {text!r}", field="period_set") from e
    return PeriodSet.of(values)


def parse_n_range(text: str) -> list[int]:
    """'6' -> [6], '1-6' -> [1..6]."""
    try:
        low, _, high = text.partition("-")
        values = list(range(int(low), int(high or low) + 1))
    except ValueError as e:
        raise InstanceError(f"n must be an integer or a range like 1-6, got {text!r}", field="n") from e
    if not values or values[0] < 1:
        raise InstanceError(f"n range must be non-empty and start at 1 or more, got {text!r}", field="n")
    return values


# COMMANDS


def cmd_simulate(
    instance_path: PathLike,
    solver: str = "optimal",
    horizon: Optional[int] = None,
    trace: bool = False,
) -> tuple[SyncReport, Optional[TraceDocument]]:
    """Synchronize the instance in `instance_path` and optionally keep its trace."""
    document = read_instance(instance_path)
    assignment = document.to_assignment()
    baseline = get_solver(solver)
    name = document.name or Path(instance_path).stem
    logger.info(f"Simulating {name}: periods={document.periods} solver={baseline.name}")

    report, trajectory = simulate_wrapper(assignment, baseline, horizon=horizon, record=trace, name=name)
    log_sync_report(report.summary())
    trace_document = None
    if trajectory is not None:
        trace_document = TraceDocument.from_trajectory(trajectory, glyph=host_glyph, title=name)
    return report, trace_document


def cmd_oracle(instance_path: PathLike) -> dict:
    """Signal schedule and reference times for an instance."""
    document = read_instance(instance_path)
    assignment = document.to_assignment()
    schedule = round_trip(assignment)
    result = {
        "name": document.name or Path(instance_path).stem,
        "periods": list(assignment.periods),
        "arrivals": list(schedule.arrivals),
        "returns": list(schedule.returns),
        "round_trip_time": schedule.round_trip_time,
        "mu_reference": mu_reference(assignment),
        "uniform_transfer_time": uniform_transfer_time(assignment.n, assignment.p_max),
        "instance_count": instance_count(assignment.period_set, assignment.n),
    }
    if document.provenance and "family" in document.provenance:
        result["closed_form_roundtrip"] = closed_form_roundtrip(assignment)
    return result


def cmd_generate(
    period_set: PeriodSet,
    m: int,
    out_dir: PathLike,
    select: str = "index",
    index: int = 0,
    count: int = 1,
    seed: Optional[int] = None,
    head: Optional[int] = None,
) -> list[Path]:
    """Write block-family instances; select is 'index', 'all' or 'random'."""
    params = choose_family_params(period_set.members, m, head=head)
    if select == "all":
        indices = range(arrangement_count(m))
    elif select == "random":
        indices = sample_arrangement_indices(m, count, seed=seed)
    elif select == "index":
        indices = [index]
    else:
        raise InstanceError(f"unknown arrangement selector {select!r}", field="select")

    tag = "-".join(str(p) for p in period_set.members)
    paths = []
    for i in indices:
        word = arrangement_at(m, i)
        assignment = block_family_instance(params, word)
        document = InstanceDocument.from_assignment(
            assignment,
            name=f"family_P{tag}_m{m}_{i}",
            provenance={"family": params.as_dict(), "arrangement": list(word), "index": i},
        )
        paths.append(write_instance(document, Path(out_dir) / f"{document.name}.yaml"))
    logger.info(f"Wrote {len(paths)} of {arrangement_count(m)} arrangements to {out_dir}")
    return paths


def cmd_verify(
    period_set: PeriodSet,
    n_values: Sequence[int],
    solver: str = "optimal",
    budget: Optional[int] = None,
    n_jobs: Optional[int] = None,
    horizon: Optional[int] = None,
) -> list[SweepRecord]:
    """Exhaustive sweep over all |P|^n assignments for each n."""
    settings = get_settings()
    return run_sweep(
        period_set,
        n_values,
        solver_name=solver,
        budget=budget or settings.budget,
        n_jobs=n_jobs or settings.n_jobs,
        horizon=horizon,
    )


def cmd_render(
    source: PathLike,
    signal: bool = False,
    solver: str = "optimal",
    horizon: Optional[int] = None,
    svg: Optional[PathLike] = None,
    width: Optional[int] = None,
    height: Optional[int] = None,
) -> str:
    """Render a stored trace, or trace an instance file first.

    Instances are traced with the wrapper, or with the signal rule when
    `signal` is set. Returns the text diagram, or the SVG path when `svg` is given.
    """
    try:
        data = yaml.safe_load(Path(source).read_text()) if Path(source).exists() else None
    except yaml.YAMLError:
        data = None
    if isinstance(data, dict) and "rows" in data:
        document = read_trace(source)
    else:
        instance = read_instance(source)
        assignment = instance.to_assignment()
        title = instance.name or Path(source).stem
        if signal:
            steps = horizon or (2 * assignment.k + 2)
            trajectory = run_trajectory(signal_update, signal_initial(assignment.n), assignment, steps)
            document = TraceDocument.from_trajectory(trajectory, title=title)
        else:
            _, trajectory = simulate_wrapper(assignment, get_solver(solver), horizon=horizon, record=True, name=title)
            document = TraceDocument.from_trajectory(trajectory, glyph=host_glyph, title=title)

    if svg is not None:
        return str(render_svg(document, svg, width=width, height=height))
    return render_text(document, width=width, height=height)


# ARGUMENT HANDLERS


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _single_row(data: dict) -> str:
    return pd.DataFrame([data]).to_csv(index=False)


def _run_simulate(args) -> int:
    report, trace = cmd_simulate(args.instance, solver=args.solver, horizon=args.horizon, trace=bool(args.trace))
    if args.full:
        # nested per-cycle records only fit the document form
        _emit(yaml.safe_dump(report.model_dump(), sort_keys=False), args.output)
    else:
        summary = report.summary()
        _emit(yaml.safe_dump(summary, sort_keys=False) if args.format == "doc" else _single_row(summary), args.output)

    if trace is not None:
        target = Path(args.trace)
        if target.suffix == ".svg":
            render_svg(trace, target)
        elif target.suffix == ".txt":
            target.write_text(render_text(trace))
        else:
            write_trace(trace, target)
        logger.info(f"Trace written to {target}")

    if report.horizon_exceeded:
        logger.warning(f"{report.name}: {HorizonExceededError(report.horizon)}")
        return EXIT_BUDGET
    return EXIT_OK


def _run_oracle(args) -> int:
    result = cmd_oracle(args.instance)
    if args.format == "doc":
        _emit(yaml.safe_dump(result, sort_keys=False), args.output)
        return EXIT_OK

    cells = pd.DataFrame(
        {
            "cell": range(1, len(result["periods"]) + 1),
            "period": result["periods"],
            "arrival": result["arrivals"],
            "return": result["returns"],
        }
    )
    totals = {key: value for key, value in result.items() if key not in ("name", "periods", "arrivals", "returns")}
    quantities = pd.DataFrame({"quantity": list(totals), "value": list(totals.values())})
    _emit(cells.to_csv(index=False) + "\n" + quantities.to_csv(index=False), args.output)
    return EXIT_OK


def _run_generate(args) -> int:
    select = "all" if args.all else "random" if args.random else "index"
    paths = cmd_generate(
        parse_period_set(args.period_set),
        args.m,
        args.out,
        select=select,
        index=args.index,
        count=args.random or 1,
        seed=args.seed,
        head=args.head,
    )
    _emit("".join(f"{path}\n" for path in paths), None)
    return EXIT_OK


def _run_verify(args) -> int:
    records = cmd_verify(
        parse_period_set(args.period_set),
        parse_n_range(args.n),
        solver=args.solver,
        budget=args.budget,
        n_jobs=args.jobs,
        horizon=args.horizon,
    )
    _emit(format_records(records, args.format), args.output)
    return EXIT_OK if all(record.passed for record in records) else EXIT_VERIFY_FAILED


def _run_render(args) -> int:
    result = cmd_render(
        args.source,
        signal=args.signal,
        solver=args.solver,
        horizon=args.horizon,
        svg=args.svg,
        width=args.width,
        height=args.height,
    )
    _emit(result if args.svg is None else f"{result}\n", args.output if args.svg is None else None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--solver", default="optimal", help=f"{' | '.join(SOLVERS)} or a rule-table file")
    common.add_argument("--trace", default=None, metavar="PATH", help="record the run (.yaml trace, .txt or .svg)")
    common.add_argument("--format", choices=("table", "doc"), default="table", help="CSV table or YAML document")
    common.add_argument("--seed", type=int, default=None, help="seed for random arrangement selection")
    common.add_argument("--budget", type=int, default=None, help="maximum instances per sweep")
    common.add_argument("--horizon", type=int, default=None, help="step horizon for a run")
    common.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="msfssp", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG output on the console")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", parents=[common], help="synchronize an instance file")
    simulate.add_argument("instance")
    simulate.add_argument(
        "--full", action="store_true", help="YAML report with cycle records, snapshots and collect failures"
    )
    simulate.set_defaults(handler=_run_simulate)

    oracle = sub.add_parser("oracle", parents=[common], help="earliest-arrival schedule of an instance")
    oracle.add_argument("instance")
    oracle.set_defaults(handler=_run_oracle)

    generate = sub.add_parser("generate", parents=[common], help="write block-family instances")
    generate.add_argument("--period-set", required=True, help="comma-separated periods, e.g. 2,3")
    generate.add_argument("--m", type=int, required=True, help="blocks of each type")
    generate.add_argument("--out", default="instances", help="output directory")
    generate.add_argument("--head", type=int, default=None, help="period of the two head cells")
    chosen = generate.add_mutually_exclusive_group()
    chosen.add_argument("--index", type=int, default=0, help="arrangement index (lexicographic)")
    chosen.add_argument("--all", action="store_true", help="every arrangement")
    chosen.add_argument("--random", type=int, default=None, metavar="COUNT", help="COUNT random arrangements")
    generate.set_defaults(handler=_run_generate)

    verify = sub.add_parser("verify", parents=[common], help="exhaustive sweep over all assignments")
    verify.add_argument("--period-set", required=True)
    verify.add_argument("--n", required=True, help="length or range, e.g. 6 or 1-6")
    verify.add_argument("--jobs", type=int, default=None, help="worker processes")
    verify.set_defaults(handler=_run_verify)

    render = sub.add_parser("render", parents=[common], help="draw a trace or an instance")
    render.add_argument("source", help="trace document or instance file")
    render.add_argument("--signal", action="store_true", help="trace the earliest-arrival signal")
    render.add_argument("--svg", default=None, metavar="PATH", help="write an SVG diagram")
    render.add_argument("--width", type=int, default=None)
    render.add_argument("--height", type=int, default=None)
    render.set_defaults(handler=_run_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        setup_logger(level="DEBUG")
    try:
        return args.handler(args)
    except (BudgetExceededError, HorizonExceededError) as e:
        logger.warning(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except CollectionShortfallError as e:
        logger.error(f"Wrapper invariant failed: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except MsfsspError as e:
        field = getattr(e, "field", None)
        logger.warning(f"Rejected input{f' ({field})' if field else ''}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
