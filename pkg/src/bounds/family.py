"""Block-structured instance family used for the lower-bound experiments.

An instance is a head of two equal-period cells, 2m blocks and a tail.
A block of period p holds m_c / p cells, where m_c = lcm M, so every full
block takes exactly m_c steps for the earliest signal to cross.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

import numpy as np
from loguru import logger

from ..errors import FamilyConstructionError, InstanceError
from ..msca.kernel import PeriodAssignment, PeriodSet

# numpy's bounded sampler needs totals below 2**63
MAX_SAMPLED_M = 30


@dataclass(frozen=True)
class BlockFamilyParams:
    """Derived constants of the family for a period set P and block count m."""

    period_set: tuple[int, ...]
    m: int
    members: tuple[int, ...]          # M
    q: int
    m_c: int
    block_lengths: dict[int, int] = field(hash=False)
    block_periods: tuple[int, int] = (0, 0)   # periods of arrangement symbols 0 and 1
    head: int = 0

    @property
    def b_q(self) -> int:
        return self.block_lengths[self.q]

    @property
    def h(self) -> int:
        return self.b_q // 2

    @property
    def tail_length(self) -> int:
        return self.h + 1

    def length(self) -> int:
        """Number of cells of every instance in this family."""
        blocks = sum(self.block_lengths[p] for p in self.block_periods)
        return 2 + self.m * blocks + self.tail_length

    def as_dict(self) -> dict:
        return {
            "period_set": list(self.period_set),
            "m": self.m,
            "members": list(self.members),
            "q": self.q,
            "m_c": self.m_c,
            "block_lengths": {str(p): b for p, b in sorted(self.block_lengths.items())},
            "block_periods": list(self.block_periods),
            "head": self.head,
            "b_q": self.b_q,
            "h": self.h,
        }


def choose_family_params(period_set: Sequence[int], m: int, head: Optional[int] = None) -> BlockFamilyParams:
    """Pick M, q, m_c and the two block types for P.

    M is the odd part of P when it has two or more members; otherwise the odd
    part plus the largest even member, which becomes q. With an odd q the
    block length m_c / q is odd, so the tail length h + 1 with 2h + 1 = b_q
    is well defined.
    """
    pset = PeriodSet.of(period_set)
    if len(pset) < 2:
        raise FamilyConstructionError("the family needs at least two distinct periods", field="period_set")
    if pset.g != 1:
        raise FamilyConstructionError(f"gcd of the period set must be 1, got {pset.g}", field="period_set")
    if m < 1:
        raise FamilyConstructionError(f"m must be at least 1, got {m}", field="m")

    odd = pset.odd_members
    if len(odd) >= 2:
        members = odd
        q = max(odd)
    else:
        q = max(p for p in pset.members if p % 2 == 0)
        members = tuple(sorted(set(odd) | {q}))

    m_c = math.lcm(*members)
    block_lengths = {p: m_c // p for p in members}
    if block_lengths[q] % 2 != 1:
        raise FamilyConstructionError(f"block length m_c/q = {block_lengths[q]} must be odd", field="period_set")

    head = q if head is None else head
    if head not in pset:
        raise FamilyConstructionError(f"head period {head} is not in the period set", field="head")

    params = BlockFamilyParams(
        period_set=pset.members,
        m=m,
        members=members,
        q=q,
        m_c=m_c,
        block_lengths=block_lengths,
        block_periods=(max(members), min(members)),
        head=head,
    )
    logger.debug(f"family params for P={list(pset.members)}: M={list(members)} q={q} m_c={m_c}")
    return params


def arrangement_count(m: int) -> int:
    """C(2m, m), the number of ways to order m blocks of each type (exact)."""
    if m < 1:
        raise InstanceError(f"m must be at least 1, got {m}", field="m")
    return math.comb(2 * m, m)


def arrangements(m: int) -> Iterator[tuple[int, ...]]:
    """All words with m zeros and m ones, in lexicographic order."""
    arrangement_count(m)
    for zeros in combinations(range(2 * m), m):
        word = [1] * (2 * m)
        for position in zeros:
            word[position] = 0
        yield tuple(word)


def arrangement_at(m: int, index: int) -> tuple[int, ...]:
    """The index-th arrangement in lexicographic order."""
    total = arrangement_count(m)
    if not 0 <= index < total:
        raise InstanceError(f"arrangement index must be in [0, {total}), got {index}", field="index")
    word = []
    zeros, ones = m, m
    for _ in range(2 * m):
        # words that put a zero here
        starting_with_zero = math.comb(zeros - 1 + ones, ones) if zeros else 0
        if index < starting_with_zero:
            word.append(0)
            zeros -= 1
        else:
            index -= starting_with_zero
            word.append(1)
            ones -= 1
    return tuple(word)


def sample_arrangement_indices(m: int, count: int, seed: Optional[int] = None) -> list[int]:
    """`count` distinct arrangement indices drawn uniformly, sorted."""
    total = arrangement_count(m)
    if count < 1:
        raise InstanceError(f"count must be at least 1, got {count}", field="count")
    if count >= total:
        return list(range(total))
    if m > MAX_SAMPLED_M:
        raise FamilyConstructionError(f"random selection supports m <= {MAX_SAMPLED_M}", field="m")
    rng = np.random.default_rng(seed)
    picked = rng.choice(total, size=count, replace=False)
    return sorted(int(index) for index in picked)


def sample_arrangements(m: int, count: int, seed: Optional[int] = None) -> list[tuple[int, ...]]:
    """Random arrangements in lexicographic order; the same seed gives the same selection."""
    return [arrangement_at(m, index) for index in sample_arrangement_indices(m, count, seed)]


def block_family_instance(params: BlockFamilyParams, arrangement: Sequence[int]) -> PeriodAssignment:
    """Head, blocks in `arrangement` order, then the tail of h + 1 cells of period q."""
    arrangement = tuple(arrangement)
    if len(arrangement) != 2 * params.m or sum(arrangement) != params.m or set(arrangement) - {0, 1}:
        raise FamilyConstructionError(
            f"arrangement must hold {params.m} zeros and {params.m} ones, got {list(arrangement)}",
            field="arrangement",
        )
    periods = [params.head, params.head]
    for symbol in arrangement:
        p = params.block_periods[symbol]
        periods.extend([p] * params.block_lengths[p])
    periods.extend([params.q] * params.tail_length)
    return PeriodAssignment.of(periods, period_set=params.period_set)


def closed_form_roundtrip(assignment: PeriodAssignment) -> int:
    """2 * sum(p) - 2p_1 - p_2 - p_n + 2."""
    if assignment.n < 2:
        raise InstanceError("closed form needs at least 2 cells", field="periods")
    p = assignment.periods
    return 2 * sum(p) - 2 * p[0] - p[1] - p[-1] + 2


def block_spans(params: BlockFamilyParams, arrangement: Sequence[int], arrivals: Sequence[int]) -> list[int]:
    """Steps the earliest signal spends crossing each block.

    Measured from the arrival at the cell before the block to the arrival at
    its last cell, which equals m_c for every block.
    """
    spans = []
    last = 2
    for symbol in arrangement:
        length = params.block_lengths[params.block_periods[symbol]]
        spans.append(arrivals[last + length - 1] - arrivals[last - 1])
        last += length
    return spans
