"""Divisible design graphs with loops: finite-geometry constructions and exact verification."""

from .graph import LoopedGraph, Partition, complement
from .lddg import (
    LddgParams,
    Refutation,
    certificate,
    complement_params,
    dual_seidel_switch,
    find_canonical_partition,
    spectrum_from_params,
    verify_lddg,
)

__all__ = [
    "LoopedGraph",
    "Partition",
    "complement",
    "LddgParams",
    "Refutation",
    "certificate",
    "complement_params",
    "dual_seidel_switch",
    "find_canonical_partition",
    "spectrum_from_params",
    "verify_lddg",
]
