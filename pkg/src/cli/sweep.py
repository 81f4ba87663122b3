"""Pass/fail battery over many instances, fanned out with joblib."""

from itertools import product
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import pandas as pd
import yaml
from joblib import Parallel, delayed
from loguru import logger
from pydantic import BaseModel, Field

from ..automata.solvers import get_solver
from ..bounds.signals import instance_count, mu_reference, round_trip
from ..errors import BudgetExceededError, CollectionShortfallError
from ..msca.kernel import PeriodAssignment, PeriodSet
from ..wrapper.runner import baseline_mismatches, simulate_wrapper


class SweepRecord(BaseModel):
    """One instance of a sweep with its measured and reference times."""

    index: int
    periods: list[int]
    name: Optional[str] = None
    provenance: Optional[dict[str, Any]] = None
    solver: str
    k: int
    t_c: int
    fire_time: Optional[int] = None
    predicted: int
    round_trip: Optional[int] = Field(None, description="Round-trip lower bound, None for a single cell")
    bound_2k_plus_tc: int
    mu_reference: int
    simultaneous: bool
    no_early_fire: bool
    timing_exact: bool
    within_bound: bool
    above_round_trip: bool
    collect_ok: bool
    oracle_ok: bool
    passed: bool
    failures: list[str] = Field(default_factory=list)

    def row(self) -> dict:
        """Flat row for the tabular report."""
        data = self.model_dump(exclude={"provenance", "failures"})
        data["periods"] = " ".join(str(p) for p in self.periods)
        data["failures"] = "; ".join(self.failures)
        return data


def evaluate_instance(
    assignment: PeriodAssignment,
    solver_name: str = "optimal",
    horizon: Optional[int] = None,
    index: int = 0,
    name: Optional[str] = None,
    provenance: Optional[dict[str, Any]] = None,
) -> SweepRecord:
    """Run the wrapper once and apply every check."""
    solver = get_solver(solver_name)
    failures = []
    try:
        report, _ = simulate_wrapper(assignment, solver, horizon=horizon, name=name)
    except CollectionShortfallError as e:
        logger.warning(f"collection shortfall on periods={list(assignment.periods)}: {e}")
        raise

    lower = round_trip(assignment).round_trip_time if assignment.n >= 2 else None
    mismatches = baseline_mismatches(report, solver)

    checks = {
        "simultaneous": report.simultaneous,
        "no_early_fire": not report.early_fire,
        "timing_exact": report.timing_exact,
        "within_bound": report.within_bound,
        "above_round_trip": lower is None or (report.fire_time is not None and report.fire_time >= lower),
        "collect_ok": report.collect_ok and report.fire_coherent,
        "oracle_ok": not mismatches,
    }
    failures.extend(check for check, ok in checks.items() if not ok)
    failures.extend(report.collect_failures)
    if mismatches:
        failures.append(f"v-chain differs from baseline at common updates {mismatches[:5]}")
    if report.horizon_exceeded:
        failures.append(f"no firing within {report.horizon} steps")

    return SweepRecord(
        index=index,
        periods=list(assignment.periods),
        name=name,
        provenance=provenance,
        solver=solver.name,
        k=report.k,
        t_c=report.t_c,
        fire_time=report.fire_time,
        predicted=report.predicted,
        round_trip=lower,
        bound_2k_plus_tc=report.bound_2k_plus_tc,
        mu_reference=mu_reference(assignment),
        passed=all(checks.values()),
        failures=failures,
        **checks,
    )


def _evaluate_periods(index: int, periods: tuple[int, ...], period_set: tuple[int, ...], solver_name: str, horizon):
    assignment = PeriodAssignment.of(periods, period_set=period_set)
    return evaluate_instance(assignment, solver_name, horizon=horizon, index=index)


def sweep_size(period_set: PeriodSet, n_values: Iterable[int]) -> int:
    return sum(instance_count(period_set, n) for n in n_values)


def check_budget(period_set: PeriodSet, n_values: Sequence[int], budget: int) -> int:
    """Total instance count, refusing sweeps above `budget`."""
    required = sweep_size(period_set, n_values)
    if required > budget:
        raise BudgetExceededError(required, budget)
    return required


def enumerate_assignments(period_set: PeriodSet, n: int) -> Iterable[tuple[int, ...]]:
    """All |P|^n period vectors of length n, in lexicographic order."""
    return product(period_set.members, repeat=n)


def run_sweep(
    period_set: PeriodSet,
    n_values: Sequence[int],
    solver_name: str = "optimal",
    budget: int = 100_000,
    n_jobs: int = 1,
    horizon: Optional[int] = None,
) -> list[SweepRecord]:
    """Exhaustive battery over every assignment of each length in `n_values`.

    Results come back in enumeration order regardless of worker completion.
    """
    required = check_budget(period_set, n_values, budget)
    get_solver(solver_name)
    logger.info(f"Sweeping {required} instances over P={list(period_set.members)} n={list(n_values)}")

    jobs = (
        delayed(_evaluate_periods)(index, periods, period_set.members, solver_name, horizon)
        for index, periods in enumerate(
            periods for n in n_values for periods in enumerate_assignments(period_set, n)
        )
    )
    records = Parallel(n_jobs=n_jobs)(jobs)

    failed = [record for record in records if not record.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(records)} instances failed, first: {failed[0].periods}")
    else:
        logger.info(f"All {len(records)} instances passed")
    return records


def records_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    columns = [column for column in SweepRecord.model_fields if column != "provenance"]
    return pd.DataFrame([record.row() for record in records], columns=columns)


def format_records(records: Sequence[SweepRecord], fmt: str = "table") -> str:
    """CSV with one header line, or a YAML document when fmt == "doc"."""
    if fmt == "doc":
        return yaml.safe_dump([record.model_dump() for record in records], sort_keys=False)
    return records_frame(records).to_csv(index=False)


def write_records(records: Sequence[SweepRecord], filepath: Union[str, Path], fmt: str = "table") -> Path:
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(format_records(records, fmt))
    return filepath
