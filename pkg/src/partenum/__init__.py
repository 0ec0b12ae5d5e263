"""Lexicographic enumeration of set partitions as restricted growth strings."""

from .blockcount import BlockCountSpec, Regime
from .counting import bell, count, q_sum, set_sum, stirling, stirling_sum
from .enumerators import (
    FORWARD,
    REVERSE,
    EnumeratorState,
    OpCounters,
    advance,
    drain,
    first,
    iter_partitions,
    next_u,
    next_u_star,
    next_v,
    next_w,
    next_x,
    next_y,
    next_z,
    next_z_star,
    partitions,
    skip_to_k_blocks,
)
from .rgs import block_count, from_blocks, prefix_maxima, to_blocks, validate

__all__ = [
    "BlockCountSpec",
    "EnumeratorState",
    "FORWARD",
    "OpCounters",
    "REVERSE",
    "Regime",
    "advance",
    "bell",
    "block_count",
    "count",
    "drain",
    "first",
    "from_blocks",
    "iter_partitions",
    "next_u",
    "next_u_star",
    "next_v",
    "next_w",
    "next_x",
    "next_y",
    "next_z",
    "next_z_star",
    "partitions",
    "prefix_maxima",
    "q_sum",
    "set_sum",
    "skip_to_k_blocks",
    "stirling",
    "stirling_sum",
    "to_blocks",
    "validate",
]
