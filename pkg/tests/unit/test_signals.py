"""Unit tests for the earliest-arrival signal oracle."""

import numpy as np
import pytest

from src.bounds.signals import (
    SIGNAL_LEFT,
    SIGNAL_RIGHT,
    earliest_arrival,
    instance_count,
    mu_reference,
    round_trip,
    signal_initial,
    signal_update,
    uniform_transfer_time,
)
from src.errors import InstanceError
from src.msca.kernel import PeriodAssignment, PeriodSet, run_trajectory


def first_time(trajectory, cell, symbols):
    """First step at which `cell` (1-based) holds one of `symbols`."""
    for t, config in enumerate(trajectory.configs):
        if config[cell - 1] in symbols:
            return t
    return None


class TestEarliestArrival:
    """Tests for a_1..a_n."""

    def test_fast_signal_picture(self, fast_signal_periods):
        """Two period-3 cells then period 2."""
        assert earliest_arrival(PeriodAssignment.of(fast_signal_periods)) == [0, 1, 4, 7, 9, 11, 13]

    def test_alternating_speeds(self, alternating_periods):
        """Alternating 1 and 2 still moves at speed 1."""
        assert earliest_arrival(PeriodAssignment.of(alternating_periods)) == list(range(9))

    def test_all_ones(self):
        """All periods 1 gives a_i = i - 1."""
        assert earliest_arrival(PeriodAssignment.of([1] * 6)) == [0, 1, 2, 3, 4, 5]


class TestRoundTrip:
    """Tests for the return times and the round-trip total."""

    def test_bounce_at_border(self, alternating_periods):
        """Alternating speeds return at speed 1: r_8=9, r_7=10, r_6=11."""
        schedule = round_trip(PeriodAssignment.of(alternating_periods))
        assert schedule.r(9) == 8
        assert (schedule.r(8), schedule.r(7), schedule.r(6)) == (9, 10, 11)

    def test_head_of_period_three(self, period_three_head_periods):
        """a_7=11 and returns 13, 15, 17, 19, 22 from cell 6 down to cell 2."""
        schedule = round_trip(PeriodAssignment.of(period_three_head_periods))
        assert schedule.a(7) == 11
        assert [schedule.r(i) for i in (6, 5, 4, 3, 2)] == [13, 15, 17, 19, 22]
        assert schedule.round_trip_time == 23

    @pytest.mark.parametrize("n", [2, 3, 5, 10])
    def test_all_ones(self, n):
        """All periods 1: the round trip is 2n - 2."""
        schedule = round_trip(PeriodAssignment.of([1] * n))
        assert schedule.round_trip_time == 2 * n - 2
        assert schedule.r(1) == 2 * n - 2

    def test_family_instance(self, family_instance_periods):
        """Cell 1 picks the signal up at its next activation after r_2."""
        schedule = round_trip(PeriodAssignment.of(family_instance_periods))
        assert schedule.r(2) == 33
        assert schedule.round_trip_time == 34
        assert schedule.r(1) == 35

    def test_single_cell_rejected(self):
        """A round trip needs two cells."""
        with pytest.raises(InstanceError):
            round_trip(PeriodAssignment.of([3]))


class TestReferenceTimes:
    """Tests for the comparison numbers reported next to the oracle."""

    def test_mu_reference(self, family_instance_periods):
        """n * p_max."""
        assert mu_reference(PeriodAssignment.of([1, 3, 2, 3, 1])) == 15
        assert mu_reference(PeriodAssignment.of([1] * 7)) == 7
        assert mu_reference(PeriodAssignment.of(family_instance_periods)) == 27

    def test_uniform_transfer_time(self):
        """(2n-2) * p."""
        assert uniform_transfer_time(5, 3) == 24
        assert uniform_transfer_time(1, 4) == 0

    def test_instance_count(self):
        """|P|^n."""
        assert instance_count(PeriodSet.of([1, 2]), 6) == 64
        assert instance_count(PeriodSet.of([1, 2, 3]), 5) == 243


class TestSignalRule:
    """Tests for the signal as a multi-speed automaton."""

    def test_first_present_times_match_oracle(self):
        """Running the rule reproduces a_i and r_i on random assignments."""
        rng = np.random.default_rng(31)
        for _ in range(60):
            periods = [int(p) for p in rng.integers(1, 5, size=int(rng.integers(2, 10)))]
            assignment = PeriodAssignment.of(periods)
            schedule = round_trip(assignment)
            trajectory = run_trajectory(signal_update, signal_initial(assignment.n), assignment, schedule.r(1) + 2)

            for i in range(2, assignment.n + 1):
                assert first_time(trajectory, i, (SIGNAL_RIGHT, SIGNAL_LEFT)) == schedule.a(i)
            for i in range(1, assignment.n + 1):
                assert first_time(trajectory, i, (SIGNAL_LEFT,)) == schedule.r(i)

    def test_initial_configuration(self):
        """The signal starts in cell 1."""
        assert signal_initial(3) == (SIGNAL_RIGHT, ".", ".")
