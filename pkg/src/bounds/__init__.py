"""Signal oracle, reference times and the block instance family."""

from .family import (
    BlockFamilyParams,
    arrangement_at,
    arrangement_count,
    arrangements,
    block_family_instance,
    block_spans,
    choose_family_params,
    closed_form_roundtrip,
    sample_arrangement_indices,
    sample_arrangements,
)
from .signals import (
    SignalSchedule,
    earliest_arrival,
    instance_count,
    mu_reference,
    round_trip,
    signal_initial,
    signal_update,
    uniform_transfer_time,
)

__all__ = [
    "BlockFamilyParams",
    "arrangement_at",
    "arrangement_count",
    "arrangements",
    "block_family_instance",
    "block_spans",
    "choose_family_params",
    "closed_form_roundtrip",
    "sample_arrangement_indices",
    "sample_arrangements",
    "SignalSchedule",
    "earliest_arrival",
    "instance_count",
    "mu_reference",
    "round_trip",
    "signal_initial",
    "signal_update",
    "uniform_transfer_time",
]
