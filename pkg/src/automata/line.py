"""Synchronous one-dimensional CA kernel: instances, global steps and light-cone advances."""

from dataclasses import dataclass, field
from typing import Optional, Sequence

from loguru import logger

from ..errors import ConeContextError, InstanceError
from .rules import BORDER, FIRE, GENERAL, QUIESCENT, RuleTable

LineConfig = tuple[str, ...]


@dataclass
class FireReport:
    """Outcome of running a solver on the instance of size n."""

    n: int
    fire_step: Optional[int]
    early_fire: bool
    first_fire_step: Optional[int]
    steps_run: int
    timed_out: bool
    trajectory: list[LineConfig] = field(default_factory=list, repr=False)

    @property
    def simultaneous(self) -> bool:
        return self.fire_step is not None and not self.early_fire


def make_instance(n: int) -> LineConfig:
    """Problem instance of size n: a general followed by n-1 quiescent cells."""
    if n < 1:
        raise InstanceError(f"instance size must be at least 1, got {n}", field="n")
    return (GENERAL,) + (QUIESCENT,) * (n - 1)


def apply_rule(rule: RuleTable, config: Sequence[str]) -> LineConfig:
    """One synchronous global step; cells outside the config are borders."""
    padded = (BORDER, *config, BORDER)
    return tuple(rule(padded[i - 1], padded[i], padded[i + 1]) for i in range(1, len(padded) - 1))


def run_until_fire(solver, n: int, max_steps: Optional[int] = None, record: bool = False) -> FireReport:
    """Run `solver` on the size-n instance until every cell is F.

    Args:
        solver: A BaselineSolver (anything with `rule` and `check_length`).
        n: Instance size.
        max_steps: Step limit, defaulting to 4n + 16.
        record: Keep every configuration in the report.

    Returns:
        FireReport; a timeout is reported, not raised.
    """
    solver.check_length(n)
    config = make_instance(n)
    max_steps = 4 * n + 16 if max_steps is None else max_steps
    trajectory = [config] if record else []
    first_fire = None

    for t in range(1, max_steps + 1):
        config = apply_rule(solver.rule, config)
        if record:
            trajectory.append(config)
        fired = sum(1 for symbol in config if symbol == FIRE)
        if fired and first_fire is None:
            first_fire = t
        if fired == n:
            return FireReport(
                n=n,
                fire_step=t,
                early_fire=first_fire < t,
                first_fire_step=first_fire,
                steps_run=t,
                timed_out=False,
                trajectory=trajectory,
            )

    logger.warning(f"{solver.name}: no firing for n={n} within {max_steps} steps")
    return FireReport(
        n=n,
        fire_step=None,
        early_fire=first_fire is not None,
        first_fire_step=first_fire,
        steps_run=max_steps,
        timed_out=True,
        trajectory=trajectory,
    )


def cone_advance(
    rule: RuleTable,
    left_ctx: Sequence[str],
    core: Sequence[str],
    right_ctx: Sequence[str],
    steps: int,
) -> tuple[LineConfig, Optional[int]]:
    """Advance `core` by `steps` synchronous steps using only the given context.

    The window loses one valid cell per side per step, so each context must
    hold at least `steps` symbols. Returns the core and the first step at
    which a core cell became F; F is absorbing, so the core is returned as
    soon as that happens.
    """
    if len(left_ctx) < steps or len(right_ctx) < steps:
        raise ConeContextError(
            f"cone of {steps} steps needs {steps} context cells per side, "
            f"got {len(left_ctx)} left and {len(right_ctx)} right"
        )
    core = tuple(core)
    if steps == 0:
        return core, None

    width = len(core)
    window = list(left_ctx[len(left_ctx) - steps:]) + list(core) + list(right_ctx[:steps])
    for s in range(1, steps + 1):
        window = [rule(window[i - 1], window[i], window[i + 1]) for i in range(1, len(window) - 1)]
        offset = steps - s
        current = window[offset:offset + width]
        if FIRE in current:
            return tuple(current), s

    return tuple(window), None
