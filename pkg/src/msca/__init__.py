"""Multi-speed cellular automata: update schedule kernel and instance files."""

from .kernel import (
    MsTrajectory,
    PeriodAssignment,
    PeriodSet,
    active_set,
    ms_step,
    quotient_assignment,
    run_trajectory,
)
from .instances import InstanceDocument, dump_instance, parse_instance, read_instance, write_instance

__all__ = [
    "MsTrajectory",
    "PeriodAssignment",
    "PeriodSet",
    "active_set",
    "ms_step",
    "quotient_assignment",
    "run_trajectory",
    "InstanceDocument",
    "dump_instance",
    "parse_instance",
    "read_instance",
    "write_instance",
]
