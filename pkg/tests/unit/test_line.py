"""Unit tests for the synchronous line kernel and cone_advance()."""

import numpy as np
import pytest

from src.automata.line import apply_rule, cone_advance, make_instance, run_until_fire
from src.automata.rules import BORDER, FIRE, GENERAL, QUIESCENT
from src.errors import CapacityError, ConeContextError, InstanceError


class TestMakeInstance:
    """Tests for the problem instance I_n."""

    def test_single_cell(self):
        """n=1 is a lone general."""
        assert make_instance(1) == (GENERAL,)

    def test_four_cells(self):
        """n=4 is a general followed by three quiescent cells."""
        assert make_instance(4) == (GENERAL, QUIESCENT, QUIESCENT, QUIESCENT)

    def test_zero_rejected(self):
        """n < 1 raises InstanceError naming n."""
        with pytest.raises(InstanceError) as excinfo:
            make_instance(0)
        assert excinfo.value.field == "n"


class TestApplyRule:
    """Tests for one synchronous global step."""

    def test_quiescent_line_stays_quiescent(self, optimal_solver):
        """An all-quiescent configuration is a fixed point."""
        config = (QUIESCENT,) * 5
        assert apply_rule(optimal_solver.rule, config) == config

    def test_two_cells_fire_after_two_steps(self, optimal_solver):
        """[G,_] becomes [F,F] after two steps."""
        config = apply_rule(optimal_solver.rule, make_instance(2))
        assert apply_rule(optimal_solver.rule, config) == (FIRE, FIRE)


class TestRunUntilFire:
    """Tests for running a solver to its firing step."""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (5, 8), (10, 18)])
    def test_optimal_fire_steps(self, optimal_solver, n, expected):
        """The counting solver fires at 2n-2, and at 1 for a single cell."""
        report = run_until_fire(optimal_solver, n)
        assert report.fire_step == expected
        assert not report.early_fire
        assert report.simultaneous

    def test_record_keeps_trajectory(self, optimal_solver):
        """With record=True every configuration is returned."""
        report = run_until_fire(optimal_solver, 3, record=True)
        assert len(report.trajectory) == report.fire_step + 1
        assert report.trajectory[0] == make_instance(3)

    def test_timeout_is_reported(self, optimal_solver):
        """A step limit below the firing time is a timeout, not an exception."""
        report = run_until_fire(optimal_solver, 6, max_steps=3)
        assert report.timed_out
        assert report.fire_step is None

    def test_capacity_enforced(self, optimal_solver):
        """Lines longer than the solver's maximum are refused."""
        with pytest.raises(CapacityError):
            run_until_fire(optimal_solver, optimal_solver.max_length + 1)


class TestConeAdvance:
    """Tests for advancing a window with bounded context."""

    def test_zero_steps(self, optimal_solver):
        """steps=0 returns the core unchanged and no fire."""
        core, fired = cone_advance(optimal_solver.rule, (), (GENERAL, QUIESCENT), (), 0)
        assert core == (GENERAL, QUIESCENT)
        assert fired is None

    def test_quiescent_window(self, optimal_solver):
        """An all-quiescent window keeps a quiescent core."""
        quiet = (QUIESCENT,) * 3
        core, fired = cone_advance(optimal_solver.rule, quiet, quiet, quiet, 3)
        assert core == quiet
        assert fired is None

    def test_short_context_rejected(self, optimal_solver):
        """Each side needs at least `steps` context cells."""
        with pytest.raises(ConeContextError):
            cone_advance(optimal_solver.rule, (QUIESCENT,), (QUIESCENT,), (QUIESCENT,) * 2, 2)

    def test_matches_full_line_simulation(self, optimal_solver):
        """Random windows advanced 4 steps agree with simulating the whole window."""
        rule = optimal_solver.rule
        symbols = [QUIESCENT, GENERAL, "i2", "i3", "i4", "w2", "w3", "w4"]
        rng = np.random.default_rng(11)
        steps = 4
        for _ in range(50):
            width = int(rng.integers(1, 6))
            window = tuple(str(s) for s in rng.choice(symbols, size=2 * steps + width))
            left, core, right = window[:steps], window[steps:steps + width], window[steps + width:]

            advanced, fired = cone_advance(rule, left, core, right, steps)

            config = window
            for _ in range(fired or steps):
                config = apply_rule(rule, config)
            assert advanced == config[steps:steps + width]

    def test_border_context(self, optimal_solver):
        """A lone general between borders fires in one step."""
        core, fired = cone_advance(optimal_solver.rule, (BORDER,), (GENERAL,), (BORDER,), 1)
        assert core == (FIRE,)
        assert fired == 1
