"""Earliest-arrival signal oracle and reference synchronization times."""

from dataclasses import dataclass

from ..automata.rules import BORDER
from ..errors import InstanceError
from ..msca.kernel import PeriodAssignment, PeriodSet


def _next_pickup(t: int, p: int) -> int:
    """1 + the first activation time >= t of a cell with period p."""
    return 1 + -(-t // p) * p


@dataclass(frozen=True)
class SignalSchedule:
    """First-present times of a maximally fast signal sent right from cell 1 and back.

    arrivals[i-1] = a_i and returns[i-1] = r_i for cells i = 1..n.
    round_trip_time is r_2 + 1, the first step at which cell 1 can be
    affected by the returning signal (2n-2 when every period is 1).
    """

    periods: tuple[int, ...]
    arrivals: tuple[int, ...]
    returns: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.periods)

    @property
    def round_trip_time(self) -> int:
        return self.returns[1] + 1

    def r(self, i: int) -> int:
        return self.returns[i - 1]

    def a(self, i: int) -> int:
        return self.arrivals[i - 1]


def earliest_arrival(assignment: PeriodAssignment) -> list[int]:
    """a_1 = 0 and a_{i+1} = 1 + min{t >= a_i : t = 0 mod p_{i+1}}."""
    arrivals = [0]
    for p in assignment.periods[1:]:
        arrivals.append(_next_pickup(arrivals[-1], p))
    return arrivals


def round_trip(assignment: PeriodAssignment) -> SignalSchedule:
    """Forward and return times; the signal reflects within cell n's arrival step."""
    if assignment.n < 2:
        raise InstanceError("a round trip needs at least 2 cells", field="periods")
    arrivals = earliest_arrival(assignment)
    returns = [0] * assignment.n
    returns[-1] = arrivals[-1]
    for i in range(assignment.n - 2, -1, -1):
        returns[i] = _next_pickup(returns[i + 1], assignment.periods[i])
    return SignalSchedule(
        periods=assignment.periods,
        arrivals=tuple(arrivals),
        returns=tuple(returns),
    )


def mu_reference(assignment: PeriodAssignment) -> int:
    """n * p_max, the running time quoted for the earlier multi-speed algorithm."""
    return assignment.n * assignment.p_max


def uniform_transfer_time(n: int, p: int) -> int:
    """(2n-2) * p: a time-optimal standard solver run on n cells that all have period p."""
    return (2 * n - 2) * p


def instance_count(period_set: PeriodSet, n: int) -> int:
    """Number of problem instances of size n, |P|^n."""
    return len(period_set) ** n


# Signal states for the multi-speed kernel
SIGNAL_EMPTY = "."
SIGNAL_RIGHT = ">"
SIGNAL_LEFT = "<"
SIGNAL_PASSED = "+"
SIGNAL_DONE = "*"


def signal_initial(n: int) -> tuple[str, ...]:
    return (SIGNAL_RIGHT,) + (SIGNAL_EMPTY,) * (n - 1)


def signal_update(left: str, center: str, right: str) -> str:
    """Persist-until-picked-up signal, reflected inside the border cell's arrival step."""
    if center == SIGNAL_EMPTY:
        if left == SIGNAL_RIGHT:
            return SIGNAL_LEFT if right == BORDER else SIGNAL_RIGHT
        return center
    if center == SIGNAL_RIGHT:
        if right == SIGNAL_LEFT:
            return SIGNAL_LEFT
        if right in (SIGNAL_RIGHT, SIGNAL_PASSED):
            return SIGNAL_PASSED
        return center
    if center == SIGNAL_PASSED:
        return SIGNAL_LEFT if right == SIGNAL_LEFT else center
    if center == SIGNAL_LEFT:
        return SIGNAL_DONE if left in (SIGNAL_LEFT, SIGNAL_DONE) else center
    return center
