"""Command-line surface of the toolkit."""

from .main import cmd_generate, cmd_oracle, cmd_render, cmd_simulate, cmd_verify, main
from .render import TraceDocument, render_svg, render_text
from .sweep import SweepRecord, evaluate_instance, run_sweep

__all__ = [
    "cmd_generate",
    "cmd_oracle",
    "cmd_render",
    "cmd_simulate",
    "cmd_verify",
    "main",
    "TraceDocument",
    "render_svg",
    "render_text",
    "SweepRecord",
    "evaluate_instance",
    "run_sweep",
]
