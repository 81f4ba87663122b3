"""Driving the wrapper over the multi-speed kernel and reporting on the run."""

from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field

from ..automata.line import LineConfig, apply_rule, make_instance
from ..automata.rules import FIRE, GENERAL, QUIESCENT
from ..msca.kernel import MsTrajectory, PeriodAssignment, active_set, ms_step
from .host import HostState, host_transition


@dataclass(frozen=True)
class WrapperConfig:
    """Hosts for cells 1..n at a given clock value."""

    assignment: PeriodAssignment
    solver: object
    hosts: tuple[HostState, ...]
    clock: int = 0

    @property
    def k(self) -> int:
        return self.assignment.k

    def v_chain(self) -> tuple[str, ...]:
        """Concatenation y_1 y_2 ... y_n."""
        return tuple(symbol for host in self.hosts for symbol in host.y)


class CycleRecord(BaseModel):
    """Collected context lengths at a cycle-closing common update."""

    cycle: int
    host: int
    x_len: int
    z_len: int


class SyncReport(BaseModel):
    """Outcome of one wrapper run."""

    name: Optional[str] = None
    periods: list[int]
    period_set: list[int]
    solver: str
    n: int
    k: int = Field(..., description="Total number of virtual cells")
    t_c: int
    g: int
    baseline_time: int = Field(..., description="Baseline firing time T(k)")
    fire_time: Optional[int] = None
    predicted: int
    bound_2k_plus_tc: int
    loose_bound: int = Field(..., description="t_c*floor((2k-2)/t_c) + t_c + 1")
    early_fire: bool = False
    simultaneous: bool = False
    fire_coherent: bool = True
    collect_ok: bool = True
    collect_failures: list[str] = Field(default_factory=list)
    horizon: int
    horizon_exceeded: bool = False
    steps_run: int = 0
    cycles: list[CycleRecord] = Field(default_factory=list)
    snapshots: list[list[str]] = Field(default_factory=list)

    @property
    def timing_exact(self) -> bool:
        return self.fire_time is not None and self.fire_time == self.predicted

    @property
    def within_bound(self) -> bool:
        return self.fire_time is not None and self.fire_time <= self.bound_2k_plus_tc

    def summary(self) -> dict:
        """Flat view without per-cycle instrumentation."""
        return self.model_dump(exclude={"cycles", "snapshots", "collect_failures"})


def init_wrapper(assignment: PeriodAssignment, solver) -> WrapperConfig:
    """Initial hosts: the general sits in the leftmost v-cell of host 1."""
    hosts = []
    for i, p in enumerate(assignment.periods):
        y = (GENERAL,) + (QUIESCENT,) * (p - 1) if i == 0 else (QUIESCENT,) * p
        hosts.append(HostState(p=p, tau=0, x=(), y=y, z=()))
    return WrapperConfig(assignment=assignment, solver=solver, hosts=tuple(hosts))


def predicted_fire_time(assignment: PeriodAssignment, solver) -> int:
    """t_c * ceil(T(k) / t_c) + 1."""
    t_c = assignment.t_c
    baseline = solver.fire_time(assignment.k)
    return t_c * -(-baseline // t_c) + 1


def loose_fire_bound(assignment: PeriodAssignment) -> int:
    """Upper bound t_c*floor((2k-2)/t_c) + t_c + 1 for a time-optimal baseline."""
    t_c = assignment.t_c
    return t_c * ((2 * assignment.k - 2) // t_c) + t_c + 1


def default_horizon(assignment: PeriodAssignment) -> int:
    return 4 * assignment.k + 4 * assignment.t_c


def simulate_wrapper(
    assignment: PeriodAssignment,
    solver,
    horizon: Optional[int] = None,
    record: bool = False,
    name: Optional[str] = None,
) -> tuple[SyncReport, Optional[MsTrajectory]]:
    """Run the wrapper until every host has fired, instrumenting each activation.

    Returns the report and, with record=True, the full host trajectory.
    """
    config = init_wrapper(assignment, solver)
    solver.check_length(config.k)
    t_c = assignment.t_c
    n = assignment.n
    horizon = default_horizon(assignment) if horizon is None else horizon
    update = partial(host_transition, rule=solver.rule, t_c=t_c)

    hosts = config.hosts
    trajectory = MsTrajectory(assignment=assignment, configs=[hosts]) if record else None
    cycles, snapshots, failures = [], [], []
    coherent = True
    first_fired = None
    fire_time = None

    logger.debug(f"wrapper run: periods={list(assignment.periods)} k={config.k} t_c={t_c} solver={solver.name}")

    t = 0
    while t < horizon:
        active = active_set(assignment, t)
        new = ms_step(update, hosts, assignment, t)
        phase = t % t_c
        closing = phase == 0 and t > 0

        for i in sorted(active):
            before, after = hosts[i - 1], new[i - 1]
            if before.fired:
                continue
            if before.tau != phase:
                failures.append(f"t={t} host={i}: phase {before.tau} != {phase}")
            x_len, z_len = after.collected
            if closing:
                cycles.append(CycleRecord(cycle=t // t_c, host=i, x_len=x_len, z_len=z_len))
            else:
                need = min(phase, t_c)
                if x_len < need or z_len < need:
                    failures.append(f"t={t} host={i}: collected {x_len}/{z_len}, expected at least {need}")

        if closing:
            snapshots.append([symbol for host in new for symbol in host.y])
            flags = [host.all_fire for host in new]
            if any(flags) and not all(flags):
                coherent = False

        t += 1
        hosts = new
        if trajectory is not None:
            trajectory.active_sets.append(active)
            trajectory.configs.append(hosts)

        fired = sum(1 for host in hosts if host.fired)
        if fired and first_fired is None:
            first_fired = t
        if fired == n:
            fire_time = t
            break

    if trajectory is not None:
        trajectory.final = hosts
        trajectory.steps = t
        trajectory.truncated = fire_time is None

    early = first_fired is not None and (fire_time is None or first_fired < fire_time)
    report = SyncReport(
        name=name,
        periods=list(assignment.periods),
        period_set=list(assignment.period_set.members),
        solver=solver.name,
        n=n,
        k=config.k,
        t_c=t_c,
        g=assignment.g,
        baseline_time=solver.fire_time(config.k),
        fire_time=fire_time,
        predicted=predicted_fire_time(assignment, solver),
        bound_2k_plus_tc=2 * config.k + t_c,
        loose_bound=loose_fire_bound(assignment),
        early_fire=early,
        simultaneous=fire_time is not None and not early,
        fire_coherent=coherent,
        collect_ok=not failures,
        collect_failures=failures[:20],
        horizon=horizon,
        horizon_exceeded=fire_time is None,
        steps_run=t,
        cycles=cycles,
        snapshots=snapshots,
    )

    if fire_time is None:
        logger.warning(f"wrapper run exceeded horizon {horizon} for periods={list(assignment.periods)}")
    else:
        logger.debug(f"wrapper fired at t={fire_time} (predicted {report.predicted})")
    return report, trajectory


def run_msfssp(assignment: PeriodAssignment, solver, horizon: Optional[int] = None, name: Optional[str] = None) -> SyncReport:
    """Synchronize the instance described by `assignment` with the wrapper."""
    report, _ = simulate_wrapper(assignment, solver, horizon=horizon, name=name)
    return report


@lru_cache(maxsize=256)
def _baseline_chain(solver, k: int, steps: int) -> tuple[LineConfig, ...]:
    """Baseline configurations on I_k for steps 0..steps, with F held once reached."""
    config = make_instance(k)
    chain = [config]
    for _ in range(steps):
        if not all(symbol == FIRE for symbol in config):
            config = apply_rule(solver.rule, config)
        chain.append(config)
    return tuple(chain)


def baseline_mismatches(report: SyncReport, solver) -> list[int]:
    """Common updates whose v-chain differs from the synchronous baseline on I_k."""
    if not report.snapshots:
        return []
    chain = _baseline_chain(solver, report.k, len(report.snapshots) * report.t_c)
    return [
        j
        for j, snapshot in enumerate(report.snapshots, start=1)
        if tuple(snapshot) != chain[j * report.t_c]
    ]
