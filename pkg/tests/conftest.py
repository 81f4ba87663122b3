"""Shared pytest fixtures for all tests."""

import os
import tempfile

# Keep logs and the run history out of the working tree; must run before src is imported.
_TMP = tempfile.mkdtemp(prefix="msfssp-tests-")
os.environ.setdefault("MSFSSP_LOG_DIR", os.path.join(_TMP, "logs"))
os.environ.setdefault("MSFSSP_DB_PATH", os.path.join(_TMP, "sync_runs.db"))

import pytest  # noqa: E402
import yaml  # noqa: E402

from src.automata.solvers import make_optimal_solver  # noqa: E402
from src.bounds.family import choose_family_params  # noqa: E402


@pytest.fixture
def fast_signal_periods():
    """Signal moving right as fast as possible (two period-3 cells, then period 2)."""
    return [1, 1, 3, 3, 2, 2, 2]


@pytest.fixture
def alternating_periods():
    """Alternating speeds: the signal moves and bounces back at speed 1."""
    return [1, 2, 1, 2, 1, 2, 1, 2, 1]


@pytest.fixture
def period_three_head_periods():
    """Head of period 3, one block of period 2 and the tail."""
    return [3, 3, 2, 2, 2, 2, 2]


@pytest.fixture
def family_instance_periods():
    """Block family for P={2,3}, m=1, first arrangement."""
    return [2, 2, 3, 3, 2, 2, 2, 2, 2]


@pytest.fixture
def family_params_23():
    """Family constants for P={2,3}, m=1."""
    return choose_family_params([2, 3], 1)


@pytest.fixture(scope="session")
def optimal_solver():
    """Counting solver sized for the test instances."""
    return make_optimal_solver(max_length=64)


@pytest.fixture
def instance_file(tmp_path):
    """Write an instance document and return its path."""

    def write(periods, name="test_instance", **extra):
        path = tmp_path / f"{name}.yaml"
        path.write_text(yaml.safe_dump({"name": name, "periods": list(periods), **extra}))
        return path

    return write


@pytest.fixture
def eager_rule_file(tmp_path):
    """A rule table that fires the left end of the line before the right end."""
    path = tmp_path / "eager.rules"
    path.write_text(
        "name: eager\n"
        "alphabet: # G _ F\n"
        "// every cell next to the general or an F fires\n"
        "# G # -> F\n"
        "# G _ -> F\n"
        "G _ # -> F\n"
        "G _ _ -> F\n"
        "F _ # -> F\n"
        "F _ _ -> F\n"
    )
    return path
