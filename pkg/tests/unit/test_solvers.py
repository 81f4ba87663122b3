"""Unit tests for the baseline solvers and the solver registry."""

import pytest

from src.automata.line import run_until_fire
from src.automata.rules import dump_rule_file
from src.automata.solvers import SOLVERS, get_solver, make_halving_solver, make_optimal_solver
from src.errors import CapacityError, UnknownSolverError
from src.settings import get_settings


class TestOptimalSolver:
    """Tests for the time-optimal counting solver."""

    def test_firing_time_formula(self, optimal_solver):
        """T(n) = 2n-2 for n >= 2 and T(1) = 1."""
        assert optimal_solver.fire_time(1) == 1
        assert optimal_solver.fire_time(2) == 2
        assert optimal_solver.fire_time(5) == 8

    def test_simulation_agrees_with_formula(self, optimal_solver):
        """Simulated firing steps match the declared firing time."""
        for n in range(1, 21):
            report = run_until_fire(optimal_solver, n)
            assert report.fire_step == optimal_solver.fire_time(n)
            assert report.simultaneous

    def test_validates(self):
        """The generated table satisfies the FSSP constraints."""
        assert make_optimal_solver(max_length=6).validate() == []

    def test_capacity(self):
        """An explicit max_length is a hard limit."""
        solver = make_optimal_solver(max_length=4)
        solver.check_length(4)
        with pytest.raises(CapacityError):
            solver.check_length(5)

    def test_default_table_grows(self):
        """Without an explicit max_length the table is rebuilt for longer lines."""
        solver = make_optimal_solver(max_length=4, grow=True)
        assert solver.supports(9)
        report = run_until_fire(solver, 9)
        assert report.fire_step == 16
        assert report.simultaneous
        assert solver.max_length == 9
        assert "i9" in solver.rule

    def test_registered_solver_is_uncapped(self):
        """get_solver('optimal') accepts lines past the configured initial size."""
        solver = get_solver("optimal")
        assert solver.supports(get_settings().max_length + 1)

    @pytest.mark.slow
    def test_fires_at_2n_minus_2_up_to_200(self):
        """Every n in 2..200 fires exactly at 2n-2 with no early F."""
        solver = get_solver("optimal")
        for n in range(2, 201):
            report = run_until_fire(solver, n)
            assert report.fire_step == 2 * n - 2, n
            assert not report.early_fire, n


class TestHalvingSolver:
    """Tests for the divide-and-conquer solver."""

    @pytest.fixture(scope="class")
    def halving(self):
        return make_halving_solver()

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 5), (4, 10), (5, 11)])
    def test_measured_fire_times(self, halving, n, expected):
        """Small lines fire simultaneously at the measured times."""
        report = run_until_fire(halving, n)
        assert report.fire_step == expected
        assert report.simultaneous
        assert halving.fire_time(n) == expected

    def test_validates(self, halving):
        """The tabulated rule satisfies the FSSP constraints."""
        assert halving.validate() == []

    def test_exported_table_reloads(self, halving, tmp_path):
        """A dumped table loads back through get_solver and behaves the same."""
        path = dump_rule_file(halving.rule, tmp_path / "halving.rules")
        reloaded = get_solver(str(path))
        assert reloaded.name == "halving"
        assert reloaded.fire_time(5) == 11


class TestRegistry:
    """Tests for get_solver()."""

    def test_builtin_names(self):
        """Both built-in solvers are registered."""
        assert set(SOLVERS) == {"optimal", "halving"}
        assert get_solver("optimal").optimal

    def test_unknown_name(self):
        """Unregistered names that are not files raise UnknownSolverError."""
        with pytest.raises(UnknownSolverError):
            get_solver("waksman")

    def test_unknown_name_message_is_plain(self):
        """The error reads as a sentence, not a quoted key."""
        with pytest.raises(UnknownSolverError) as excinfo:
            get_solver("waksman")
        message = str(excinfo.value)
        assert message.startswith("unknown solver 'waksman'")
        assert not message.startswith('"')
        assert isinstance(excinfo.value, KeyError)
