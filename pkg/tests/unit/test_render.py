"""Unit tests for trace documents and space-time diagrams."""

import pytest

from src.automata.solvers import make_optimal_solver
from src.bounds.signals import SIGNAL_LEFT, SIGNAL_RIGHT, signal_initial, signal_update
from src.cli.render import (
    TraceDocument,
    host_glyph,
    read_trace,
    render_svg,
    render_text,
    write_trace,
)
from src.errors import InstanceError
from src.msca.kernel import PeriodAssignment, run_trajectory
from src.wrapper.runner import simulate_wrapper


@pytest.fixture
def bounce_document(alternating_periods):
    """Signal trace over alternating periods 1 and 2."""
    assignment = PeriodAssignment.of(alternating_periods)
    trajectory = run_trajectory(signal_update, signal_initial(assignment.n), assignment, 12)
    return TraceDocument.from_trajectory(trajectory, title="bounce")


def row_lines(text):
    """Diagram lines that start with a time label."""
    return [line for line in text.splitlines() if line[:1].isdigit()]


class TestTraceDocument:
    """Tests for turning trajectories into documents."""

    def test_signal_moves_right_then_back(self, bounce_document):
        """The signal crosses at speed 1 and reflects off the border."""
        rows = bounce_document.rows
        for t in range(8):
            assert rows[t][t] == SIGNAL_RIGHT
        assert rows[8][8] == SIGNAL_LEFT
        assert (rows[9][7], rows[10][6], rows[11][5]) == (SIGNAL_LEFT,) * 3

    def test_activations_follow_periods(self, bounce_document):
        """Odd cells are always active, even cells on even steps."""
        assert bounce_document.activations[0] == list(range(1, 10))
        assert bounce_document.activations[1] == [1, 3, 5, 7, 9]
        assert bounce_document.t_c == 2
        assert bounce_document.common_updates[:3] == [0, 2, 4]

    def test_yaml_file_round_trip(self, bounce_document, tmp_path):
        """A written trace reads back unchanged."""
        path = write_trace(bounce_document, tmp_path / "traces" / "bounce.yaml")
        assert read_trace(path) == bounce_document

    def test_instance_file_is_not_a_trace(self, tmp_path):
        """A document without rows is rejected."""
        path = tmp_path / "instance.yaml"
        path.write_text("periods: [1, 2]\n")
        with pytest.raises(InstanceError):
            read_trace(path)

    def test_wrapper_hosts_as_glyphs(self):
        """Hosts render as the virtual cells they hold."""
        solver = make_optimal_solver(max_length=16)
        _, trajectory = simulate_wrapper(PeriodAssignment.of([1, 2]), solver, record=True)
        document = TraceDocument.from_trajectory(trajectory, glyph=host_glyph)
        assert document.rows[0] == ["G", "__"]
        assert document.rows[-1] == ["F", "FF"]
        assert ["G", "i2.w2"] in document.rows


class TestRenderText:
    """Tests for the plain-text diagram."""

    def test_header_and_rows(self, bounce_document):
        """Title, then periods, then one line per step."""
        lines = render_text(bounce_document).splitlines()
        assert lines[0] == "bounce"
        assert lines[1] == "p     1 2 1 2 1 2 1 2 1"
        assert len(row_lines(render_text(bounce_document))) == 13

    def test_common_updates_labelled(self, bounce_document):
        """Only rows with t divisible by t_c carry the label."""
        for line in row_lines(render_text(bounce_document)):
            t = int(line.split()[0])
            assert line.endswith("<- common update") == (t % 2 == 0)

    def test_activity_marks(self, fast_signal_periods):
        """'v' sits under cell i exactly when t is a multiple of p_i."""
        assignment = PeriodAssignment.of(fast_signal_periods)
        trajectory = run_trajectory(signal_update, signal_initial(assignment.n), assignment, 7)
        lines = render_text(TraceDocument.from_trajectory(trajectory)).splitlines()
        marks = [line for line in lines if line.startswith("      ") and "v" in line]
        assert len(marks) == 7
        for t, line in enumerate(marks):
            for i, p in enumerate(fast_signal_periods, start=1):
                column = 6 + 2 * (i - 1)
                marked = column < len(line) and line[column] == "v"
                assert marked == (t % p == 0)

    def test_truncation_markers(self, bounce_document):
        """Cut columns and rows are announced."""
        text = render_text(bounce_document, width=4, height=5)
        assert "...+5 cells" in text
        assert text.rstrip().endswith("... truncated: 8 more rows")
        assert len(row_lines(text)) == 5

    def test_empty_trace(self):
        """A trace without rows renders its header only."""
        text = render_text(TraceDocument(periods=[1, 2], t_c=2))
        assert text == "p     1 2\n"


class TestRenderSvg:
    """Tests for the vector diagram."""

    def test_writes_svg(self, bounce_document, tmp_path):
        """The output is an SVG file."""
        path = render_svg(bounce_document, tmp_path / "out" / "bounce.svg", width=5, height=6)
        assert path.exists()
        assert "<svg" in path.read_text()
