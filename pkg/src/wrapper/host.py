"""Host cells that simulate p virtual cells of a baseline solver."""

from dataclasses import dataclass, replace
from typing import Union

from ..automata.line import cone_advance
from ..automata.rules import BORDER, FIRE, RuleTable
from ..errors import CollectionShortfallError

Word = tuple[str, ...]


@dataclass(frozen=True)
class HostState:
    """One multi-speed cell of the wrapper.

    x: collected v-states to the left, rightmost symbol next to y[0].
    y: the host's own p v-cells.
    z: collected v-states to the right, leftmost symbol next to y[-1].
    tau: phase, the time modulo t_c of the host's next activation.
    started: the t = 0 activation has happened.
    collected: (|x|, |z|) right after the most recent collection.
    """

    p: int
    tau: int
    x: Word
    y: Word
    z: Word
    fired: bool = False
    started: bool = False
    collected: tuple[int, int] = (0, 0)

    @property
    def all_fire(self) -> bool:
        return all(symbol == FIRE for symbol in self.y)


Neighbour = Union[HostState, str]


def sfx(word: Word, k: int) -> Word:
    """Longest suffix of length at most k."""
    return word[len(word) - k:] if len(word) > k else word


def pfx(word: Word, k: int) -> Word:
    """Longest prefix of length at most k."""
    return word[:k]


def _left_view(left: Neighbour, t_c: int) -> Word:
    if isinstance(left, HostState):
        return left.x + left.y
    return (BORDER,) * t_c


def _right_view(right: Neighbour, t_c: int) -> Word:
    if isinstance(right, HostState):
        return right.y + right.z
    return (BORDER,) * t_c


def host_transition(left: Neighbour, state: HostState, right: Neighbour, rule: RuleTable, t_c: int) -> HostState:
    """Activation of one host; borders are passed as BORDER and seen as t_c copies of it."""
    if state.fired:
        return state

    x = sfx(_left_view(left, t_c), t_c)
    z = pfx(_right_view(right, t_c), t_c)
    tau = (state.tau + state.p) % t_c
    collected = (len(x), len(z))

    if state.tau != 0:
        return replace(state, tau=tau, x=x, z=z, collected=collected)

    if not state.started:
        return replace(state, tau=tau, x=(), z=(), started=True, collected=collected)

    # common update: the previous cycle is complete
    if len(x) != t_c or len(z) != t_c:
        raise CollectionShortfallError(
            f"host with period {state.p} collected {len(x)} left and {len(z)} right v-states, needs {t_c}"
        )
    y, _ = cone_advance(rule, x, state.y, z, t_c)
    new = replace(state, tau=tau, x=(), y=y, z=(), collected=collected)
    return replace(new, fired=new.all_fire)
