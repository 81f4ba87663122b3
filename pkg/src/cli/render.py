"""Space-time diagrams of multi-speed trajectories.

Columns are cells under a header of their periods, time runs down, a "v"
between rows t and t+1 marks the cells that transitioned at step t, and
rows at common updates are labelled.
"""

from pathlib import Path
from typing import Any, Callable, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import yaml  # noqa: E402
from pydantic import BaseModel, Field  # noqa: E402

from ..errors import InstanceError  # noqa: E402
from ..msca.kernel import MsTrajectory  # noqa: E402
from ..settings import get_settings  # noqa: E402

ACTIVE_MARK = "v"
COMMON_LABEL = "<- common update"


class TraceDocument(BaseModel):
    """A recorded trajectory reduced to printable glyphs."""

    title: Optional[str] = None
    periods: list[int]
    t_c: int
    rows: list[list[str]] = Field(default_factory=list, description="Cell glyphs per time step")
    activations: list[list[int]] = Field(
        default_factory=list, description="1-based cells that transitioned between rows t and t+1"
    )

    @property
    def common_updates(self) -> list[int]:
        return [t for t in range(len(self.rows)) if t % self.t_c == 0]

    @classmethod
    def from_trajectory(
        cls,
        trajectory: MsTrajectory,
        glyph: Callable[[Any], str] = str,
        title: Optional[str] = None,
    ) -> "TraceDocument":
        return cls(
            title=title,
            periods=list(trajectory.assignment.periods),
            t_c=trajectory.assignment.t_c,
            rows=[[glyph(cell) for cell in config] for config in trajectory.configs],
            activations=[sorted(active) for active in trajectory.active_sets],
        )


def host_glyph(host) -> str:
    """The virtual cells a wrapper host currently holds, dot-separated when a state is wider than one character."""
    separator = "." if any(len(symbol) > 1 for symbol in host.y) else ""
    return separator.join(host.y)


def write_trace(document: TraceDocument, filepath: Union[str, Path]) -> Path:
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(yaml.safe_dump(document.model_dump(), sort_keys=False))
    return filepath


def read_trace(filepath: Union[str, Path]) -> TraceDocument:
    data = yaml.safe_load(Path(filepath).read_text())
    if not isinstance(data, dict) or "rows" not in data:
        raise InstanceError(f"{filepath}: not a trace document", field="rows")
    return TraceDocument.model_validate(data)


def render_text(document: TraceDocument, width: Optional[int] = None, height: Optional[int] = None) -> str:
    """Plain-text diagram, cut after `width` cells and `height` rows with explicit markers."""
    settings = get_settings()
    width = width or settings.trace_width
    height = height or settings.trace_height

    n = len(document.periods)
    shown_cells = min(n, width)
    cut_cells = n - shown_cells
    cell_width = max([len(str(p)) for p in document.periods] + [len(g) for row in document.rows for g in row] + [1])

    def line(cells: list[str], prefix: str, suffix: str = "") -> str:
        text = prefix + " ".join(c.ljust(cell_width) for c in cells[:shown_cells])
        if cut_cells:
            text += f" ...+{cut_cells} cells"
        return (text + suffix).rstrip()

    lines = []
    if document.title:
        lines.append(document.title)
    lines.append(line([str(p) for p in document.periods], "p     "))

    shown_rows = min(len(document.rows), height)
    common = set(document.common_updates)
    for t in range(shown_rows):
        lines.append(line(document.rows[t], f"{t:<5} ", f"  {COMMON_LABEL}" if t in common else ""))
        if t < len(document.activations) and t + 1 < shown_rows:
            active = set(document.activations[t])
            marks = [ACTIVE_MARK if i in active else " " for i in range(1, n + 1)]
            lines.append(line(marks, "      "))

    if len(document.rows) > shown_rows:
        lines.append(f"... truncated: {len(document.rows) - shown_rows} more rows")
    return "\n".join(lines) + "\n"


def render_svg(
    document: TraceDocument,
    filepath: Union[str, Path],
    width: Optional[int] = None,
    height: Optional[int] = None,
) -> Path:
    """Vector diagram with triangles for active transitions and rules at common updates."""
    settings = get_settings()
    width = width or settings.trace_width
    height = height or settings.trace_height
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)

    n = min(len(document.periods), width)
    rows = document.rows[:height]
    fig, ax = plt.subplots(figsize=(max(2.0, 0.5 * n + 1), max(1.5, 0.3 * len(rows) + 1)))

    for i, p in enumerate(document.periods[:n]):
        ax.text(i, -1.2, str(p), ha="center", va="center", fontsize=8, fontweight="bold")
    for t, row in enumerate(rows):
        for i, glyph in enumerate(row[:n]):
            ax.text(i, t, glyph, ha="center", va="center", fontsize=7, family="monospace")
        if t % document.t_c == 0:
            ax.axhline(t - 0.5, color="tab:blue", linewidth=0.4)
        if t < len(document.activations) and t + 1 < len(rows):
            xs = [i - 1 for i in document.activations[t] if i <= n]
            ax.scatter(xs, [t + 0.5] * len(xs), marker="v", s=10, color="tab:gray")

    if len(document.periods) > n or len(document.rows) > len(rows):
        ax.text(n - 0.5, len(rows), "truncated", ha="right", va="top", fontsize=7, color="tab:red")
    if document.title:
        ax.set_title(document.title, fontsize=9)

    ax.set_xlim(-0.5, n - 0.5)
    ax.set_ylim(len(rows) + 0.5, -1.8)
    ax.axis("off")
    fig.savefig(filepath, format="svg", bbox_inches="tight")
    plt.close(fig)
    return filepath
