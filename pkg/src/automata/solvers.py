"""Baseline FSSP solvers for standard (single-speed) cellular automata."""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Callable, NamedTuple, Optional

from loguru import logger

from ..errors import CapacityError, HorizonExceededError, UnknownSolverError
from ..settings import get_settings
from .line import run_until_fire
from .rules import BORDER, FIRE, GENERAL, QUIESCENT, RuleTable, read_rule_file, validate_rule


@dataclass(eq=False)
class BaselineSolver:
    """A rule table plus its firing-time function.

    When `firing_time` is None the time is measured by simulation and cached.
    """

    name: str
    rule: RuleTable
    optimal: bool = False
    firing_time: Optional[Callable[[int], int]] = None
    max_length: Optional[int] = None
    rebuild: Optional[Callable[[int], RuleTable]] = field(default=None, repr=False)
    _measured: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.rule.alphabet

    def supports(self, n: int) -> bool:
        return self.max_length is None or n <= self.max_length or self.rebuild is not None

    def check_length(self, n: int):
        """Grow the table to n cells when it can, else raise CapacityError."""
        if self.max_length is None or n <= self.max_length:
            return
        if self.rebuild is None:
            raise CapacityError(
                f"solver {self.name!r} supports lines up to {self.max_length} cells, got {n}",
                field="periods",
            )
        capacity = max(n, 2 * self.max_length)
        logger.debug(f"Growing solver {self.name!r} from {self.max_length} to {capacity} cells")
        self.rule = self.rebuild(capacity)
        self.max_length = capacity

    def fire_time(self, n: int) -> int:
        """T(n): the step at which the size-n instance fires."""
        if self.firing_time is not None:
            return self.firing_time(n)
        if n not in self._measured:
            report = run_until_fire(self, n)
            if report.fire_step is None:
                raise HorizonExceededError(report.steps_run)
            self._measured[n] = report.fire_step
        return self._measured[n]

    def validate(self) -> list[str]:
        return validate_rule(self.rule)


# OPTIMAL SOLVER
# The forward wave gives every cell its index; the last cell sees the border
# on arrival and starts the return wave. A cell with index i reached by the
# return wave at step 2n-1-i waits i-1 more steps, so all cells fire at 2n-2.

def _optimal_rule(max_length: int) -> RuleTable:
    index_of = {f"i{k}": k for k in range(2, max_length + 1)}
    wait_of = {f"w{d}": d for d in range(1, max_length)}

    def label(index: int, last: bool) -> str:
        return f"w{index - 1}" if last else f"i{index}"

    def transition(left: str, center: str, right: str) -> str:
        if center == BORDER or center == FIRE:
            return center
        if center == GENERAL:
            return FIRE if right == BORDER or right in wait_of else GENERAL
        if center in wait_of:
            remaining = wait_of[center]
            return FIRE if remaining == 1 else f"w{remaining - 1}"
        if center in index_of:
            return f"w{index_of[center] - 1}" if right in wait_of else center
        # quiescent
        if left == GENERAL:
            return label(2, right == BORDER)
        if left in index_of and index_of[left] < max_length:
            return label(index_of[left] + 1, right == BORDER)
        return QUIESCENT

    alphabet = (BORDER, GENERAL, QUIESCENT, FIRE, *index_of, *wait_of)
    return RuleTable(alphabet=alphabet, function=transition, name="optimal")


def make_optimal_solver(max_length: Optional[int] = None, grow: Optional[bool] = None) -> BaselineSolver:
    """Time-optimal counting solver: fires at 2n-2 (and at 1 for n = 1).

    Args:
        max_length: Initial number of index states. Defaults to settings.max_length.
        grow: Rebuild the table for longer lines instead of raising CapacityError.
            Defaults to True only when max_length is left unset.
    """
    if grow is None:
        grow = max_length is None
    max_length = max_length or get_settings().max_length
    return BaselineSolver(
        name="optimal",
        rule=_optimal_rule(max_length),
        optimal=True,
        firing_time=lambda n: 1 if n == 1 else 2 * n - 2,
        max_length=max_length,
        rebuild=_optimal_rule if grow else None,
    )


# HALVING SOLVER
# Generals are walls. A fresh general (G) sends a speed-1 signal and a
# speed-1/3 signal into the gap on its open side; the fast one reflects at
# the far wall and meets the slow one in the middle of the gap, where one
# (odd gap) or two (even gap) fresh generals appear. A general whose
# neighbours are all walls or borders fires.

WALL = "W"


class _Signals(NamedTuple):
    side: str                # "R": gap opens to the right of its general, "L": to the left
    forward: bool            # speed-1 signal moving away from the general
    back: bool               # reflected speed-1 signal moving toward the general
    slow: Optional[int]      # speed-1/3 signal phase 0..2, None when absent


def _signal_name(signals: _Signals) -> str:
    return (
        signals.side
        + ("a" if signals.forward else "")
        + ("r" if signals.back else "")
        + ("" if signals.slow is None else f"b{signals.slow}")
    )


def _halving_rule() -> RuleTable:
    states = {}
    for side, forward, back, slow in product("RL", (False, True), (False, True), (None, 0, 1, 2)):
        if forward or back or slow is not None:
            signals = _Signals(side, forward, back, slow)
            states[_signal_name(signals)] = signals

    def walled(symbol: str) -> bool:
        return symbol in (BORDER, GENERAL, WALL)

    def same_side(symbol: str, side: str) -> Optional[_Signals]:
        signals = states.get(symbol)
        return signals if signals is not None and signals.side == side else None

    def meets(own: _Signals, behind: str, ahead: str) -> bool:
        if own.back and own.slow is not None:
            return True
        ahead_signals = same_side(ahead, own.side)
        if own.slow == 2 and ahead_signals is not None and ahead_signals.back:
            return True
        behind_signals = same_side(behind, own.side)
        return own.back and behind_signals is not None and behind_signals.slow == 2

    def advance(side: str, center: str, behind: str, ahead: str) -> Optional[_Signals]:
        own = same_side(center, side)
        behind_signals = same_side(behind, side)
        ahead_signals = same_side(ahead, side)
        launched = behind == GENERAL

        forward = launched or (behind_signals is not None and behind_signals.forward)
        back = (ahead_signals is not None and ahead_signals.back and ahead_signals.slow is None) or (
            own is not None and own.forward and walled(ahead)
        )
        if own is not None and own.slow is not None and own.slow < 2:
            slow = own.slow + 1
        elif launched or (
            behind_signals is not None and behind_signals.slow == 2 and not behind_signals.back
        ):
            slow = 0
        else:
            slow = None

        if forward or back or slow is not None:
            return _Signals(side, forward, back, slow)
        return None

    def transition(left: str, center: str, right: str) -> str:
        if center == BORDER or center == FIRE:
            return center
        if center in (GENERAL, WALL):
            return FIRE if walled(left) and walled(right) else WALL

        own = states.get(center)
        if own is not None:
            behind, ahead = (left, right) if own.side == "R" else (right, left)
            if meets(own, behind, ahead):
                return GENERAL

        moving_right = advance("R", center, left, right)
        moving_left = advance("L", center, right, left)
        if moving_right is not None and moving_left is not None:
            # gaps never touch; keep the signals already present in this cell
            chosen = moving_right if own is not None and own.side == "R" else moving_left
        else:
            chosen = moving_right or moving_left
        return QUIESCENT if chosen is None else _signal_name(chosen)

    alphabet = (BORDER, GENERAL, QUIESCENT, FIRE, WALL, *states)
    return RuleTable(alphabet=alphabet, function=transition, name="halving").tabulate()


def make_halving_solver() -> BaselineSolver:
    """Divide-and-conquer solver firing in roughly 3n steps; T(n) is measured."""
    return BaselineSolver(name="halving", rule=_halving_rule())


SOLVERS = {
    "optimal": make_optimal_solver,
    "halving": make_halving_solver,
}


@lru_cache(maxsize=None)
def get_solver(name: str) -> BaselineSolver:
    """Look up a built-in solver by name, or load a rule-table file by path."""
    if name in SOLVERS:
        logger.debug(f"Building solver {name!r}")
        return SOLVERS[name]()
    path = Path(name)
    if path.suffix or path.exists():
        table = read_rule_file(path)
        return BaselineSolver(name=table.name, rule=table)
    raise UnknownSolverError(f"unknown solver {name!r}; choose one of {', '.join(SOLVERS)} or a rule file")
