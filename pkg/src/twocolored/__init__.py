"""Exact enumeration and verification tools for two-colored partitions
with distinct parts and overpartitions into odd parts."""

from .colored_partitions import (
    Color,
    ColoredPart,
    OddTriple,
    TwoColoredPartition,
    classify,
    counts,
    decompose,
    enumerate_E,
    recompose,
)
from .partition_core import CountTable, enumerate_partitions, enumerate_strict_partitions, p_table
from .qseries import E_series, TruncatedSeries, overline_po_series, signed_difference_series

__all__ = [
    "Color",
    "ColoredPart",
    "CountTable",
    "E_series",
    "OddTriple",
    "TruncatedSeries",
    "TwoColoredPartition",
    "classify",
    "counts",
    "decompose",
    "enumerate_E",
    "enumerate_partitions",
    "enumerate_strict_partitions",
    "overline_po_series",
    "p_table",
    "recompose",
    "signed_difference_series",
]
