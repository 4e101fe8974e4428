"""Exact computation of simultaneous cores avoiding arithmetic progressions of hooks."""

from simulcores.partitions import (
    HookProgression,
    Partition,
    enumerate_cores,
    generate_partitions,
    hook_multiset,
    is_core,
    total_core_count,
)
from simulcores.qseries import TruncatedSeries, pochhammer

__all__ = [
    "HookProgression",
    "Partition",
    "TruncatedSeries",
    "enumerate_cores",
    "generate_partitions",
    "hook_multiset",
    "is_core",
    "pochhammer",
    "total_core_count",
]
