"""Multi-speed update semantics: periods, active sets and partial global steps."""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from ..automata.rules import BORDER
from ..errors import InstanceError

# update(left, center, right) -> new center; borders are passed as BORDER
CellUpdate = Callable[[Any, Any, Any], Any]
StopPredicate = Callable[[Sequence[Any], int], bool]


@dataclass(frozen=True)
class PeriodSet:
    """Finite set P of update periods."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> "PeriodSet":
        members = tuple(sorted(set(int(v) for v in values)))
        if not members:
            raise InstanceError("period set must not be empty", field="period_set")
        if members[0] < 1:
            raise InstanceError(f"periods must be positive, got {members[0]}", field="period_set")
        return cls(members)

    @property
    def g(self) -> int:
        return math.gcd(*self.members)

    @property
    def t_c(self) -> int:
        return math.lcm(*self.members)

    @property
    def interesting(self) -> bool:
        """At least two speeds and no common slowdown factor."""
        return len(self.members) >= 2 and self.g == 1

    @property
    def odd_members(self) -> tuple[int, ...]:
        return tuple(p for p in self.members if p % 2 == 1)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: int) -> bool:
        return p in self.members


@dataclass(frozen=True)
class PeriodAssignment:
    """Periods p_1..p_n of the cells of an instance, drawn from `period_set`.

    Border cells conceptually carry p_1; they never change state anyway.
    """

    periods: tuple[int, ...]
    period_set: PeriodSet

    @classmethod
    def of(cls, periods: Iterable[int], period_set: Optional[Iterable[int]] = None) -> "PeriodAssignment":
        periods = tuple(int(p) for p in periods)
        if not periods:
            raise InstanceError("an instance needs at least one cell", field="periods")
        if min(periods) < 1:
            raise InstanceError(f"periods must be positive, got {min(periods)}", field="periods")
        pset = PeriodSet.of(periods if period_set is None else period_set)
        stray = sorted(set(periods) - set(pset.members))
        if stray:
            raise InstanceError(f"periods {stray} are not members of the period set", field="period_set")
        return cls(periods, pset)

    @property
    def n(self) -> int:
        return len(self.periods)

    @property
    def k(self) -> int:
        """Total number of virtual cells, the sum of all periods."""
        return sum(self.periods)

    @property
    def p_max(self) -> int:
        return max(self.periods)

    @property
    def g(self) -> int:
        return self.period_set.g

    @property
    def t_c(self) -> int:
        return self.period_set.t_c

    def __len__(self) -> int:
        return len(self.periods)


@dataclass
class MsTrajectory:
    """Configurations c_0, c_1, ... and the active sets A_0, A_1, ... that produced them."""

    assignment: PeriodAssignment
    configs: list[tuple] = field(default_factory=list)
    active_sets: list[frozenset] = field(default_factory=list)
    final: tuple = ()
    steps: int = 0
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.configs)


def active_set(assignment: PeriodAssignment, t: int) -> frozenset[int]:
    """Positions (1-based) of the cells that update at step t."""
    if t < 0:
        raise InstanceError(f"time must be non-negative, got {t}", field="t")
    return frozenset(i for i, p in enumerate(assignment.periods, start=1) if t % p == 0)


def ms_step(update: CellUpdate, config: Sequence[Any], assignment: PeriodAssignment, t: int) -> tuple:
    """c_{t+1} = F_{A_t}(c_t): active cells apply `update`, the rest keep their state."""
    n = len(config)
    new = list(config)
    for i, p in enumerate(assignment.periods):
        if t % p:
            continue
        left = config[i - 1] if i > 0 else BORDER
        right = config[i + 1] if i + 1 < n else BORDER
        new[i] = update(left, config[i], right)
    return tuple(new)


def run_trajectory(
    update: CellUpdate,
    init: Sequence[Any],
    assignment: PeriodAssignment,
    horizon: int,
    until: Optional[StopPredicate] = None,
    record: bool = True,
) -> MsTrajectory:
    """Evolve `init` under the multi-speed schedule.

    Stops after `horizon` steps, or earlier once `until(config, t)` holds.
    When a predicate is given but never satisfied the trajectory is marked
    truncated. With record=False only the final configuration is kept.
    """
    if len(init) != assignment.n:
        raise InstanceError(
            f"configuration has {len(init)} cells, assignment has {assignment.n}", field="periods"
        )
    config = tuple(init)
    trajectory = MsTrajectory(assignment=assignment)
    if record:
        trajectory.configs.append(config)

    t = 0
    satisfied = until is not None and until(config, 0)
    while not satisfied and t < horizon:
        if record:
            trajectory.active_sets.append(active_set(assignment, t))
        config = ms_step(update, config, assignment, t)
        t += 1
        if record:
            trajectory.configs.append(config)
        satisfied = until is not None and until(config, t)

    trajectory.final = config
    trajectory.steps = t
    trajectory.truncated = until is not None and not satisfied
    return trajectory


def quotient_assignment(assignment: PeriodAssignment) -> PeriodAssignment:
    """Divide every period (and the period set) by g = gcd P."""
    g = assignment.g
    return PeriodAssignment.of(
        (p // g for p in assignment.periods),
        period_set=(p // g for p in assignment.period_set.members),
    )
