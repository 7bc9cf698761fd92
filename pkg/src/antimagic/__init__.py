"""Antimagic orientations of 2-regular and even-degree graphs."""
from .cycle_labeler import antimagic_orient_2regular
from .dispatch import antimagic_orientation
from .euler_labeler import (
    antimagic_orient_components,
    antimagic_orient_connected_even,
)
from .graph_core import (
    Arc,
    LabeledDigraph,
    UndirectedGraph,
    VertexSumReport,
    check_antimagic,
    components,
    degree_profile,
    vertex_sums,
)
from .oracle import SearchLimits, brute_force_antimagic_orientation

__all__ = [
    "Arc",
    "LabeledDigraph",
    "SearchLimits",
    "UndirectedGraph",
    "VertexSumReport",
    "antimagic_orient_2regular",
    "antimagic_orient_components",
    "antimagic_orient_connected_even",
    "antimagic_orientation",
    "brute_force_antimagic_orientation",
    "check_antimagic",
    "components",
    "degree_profile",
    "vertex_sums",
]
