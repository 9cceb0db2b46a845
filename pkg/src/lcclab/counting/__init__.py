"""Counting-based protocols: adder, full/partial counting, sorting, search."""

from .adder import AdderWiring, adder_inputs, adder_result, build_adder, default_adder_wiring
from .full import build_count_full, build_sort, build_symmetric
from .partial import build_count_partial
from .search import build_search_kth

__all__ = [
    "AdderWiring",
    "adder_inputs",
    "adder_result",
    "build_adder",
    "default_adder_wiring",
    "build_count_full",
    "build_sort",
    "build_symmetric",
    "build_count_partial",
    "build_search_kth",
]
