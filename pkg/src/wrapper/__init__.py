"""Multi-speed FSSP wrapper: hosts simulating virtual cells of a baseline solver."""

from .host import HostState, host_transition, pfx, sfx
from .runner import (
    CycleRecord,
    SyncReport,
    WrapperConfig,
    baseline_mismatches,
    init_wrapper,
    loose_fire_bound,
    predicted_fire_time,
    run_msfssp,
    simulate_wrapper,
)

__all__ = [
    "HostState",
    "host_transition",
    "pfx",
    "sfx",
    "CycleRecord",
    "SyncReport",
    "WrapperConfig",
    "baseline_mismatches",
    "init_wrapper",
    "loose_fire_bound",
    "predicted_fire_time",
    "run_msfssp",
    "simulate_wrapper",
]
