"""Pick the construction that applies to a graph and run it."""
from __future__ import annotations

from .cycle_labeler import antimagic_orient_2regular
from .euler_labeler import (
    DegreeSetError,
    OddDegreeError,
    UnsupportedClassError,
    antimagic_orient_components,
    antimagic_orient_connected_even,
)
from .graph_core import LabeledDigraph, UndirectedGraph, components, degree_profile

STRATEGIES = ("auto", "cycles", "euler", "components")

_RUNNERS = {
    "cycles": antimagic_orient_2regular,
    "euler": antimagic_orient_connected_even,
    "components": antimagic_orient_components,
}


def choose_strategy(g: UndirectedGraph) -> str:
    profile = degree_profile(g)
    degs = set(profile)
    if degs == {2}:
        return "cycles"
    odd = sorted(k for k in degs if k % 2)
    if odd:
        raise OddDegreeError(
            f"unsupported class: degrees {odd} are odd; only even-degree graphs are covered "
            "(odd-regular graphs are handled by a different, matching-based method)"
        )
    if 0 in degs:
        raise UnsupportedClassError("unsupported class: isolated vertices")
    top = max(degs)
    comps = components(g)
    if len(comps) == 1:
        if degs <= {top, top - 2}:
            return "euler"
        raise DegreeSetError(
            f"unsupported class: degree set {sorted(degs)}; the nearest covered class is "
            "connected graphs with every degree 2d or 2d-2"
        )
    if len(degs) != 1:
        raise DegreeSetError(
            f"unsupported class: disconnected graph with degree set {sorted(degs)}; the nearest "
            "covered class is 2d-regular graphs with at most two odd components"
        )
    odd_comps = sum(1 for c in comps if len(c) % 2)
    if odd_comps > 2:
        raise UnsupportedClassError(
            f"unsupported class: {odd_comps} odd components; the nearest covered class is "
            "2d-regular graphs with at most two odd components"
        )
    return "components"


def antimagic_orientation(g: UndirectedGraph, strategy: str = "auto") -> tuple[LabeledDigraph, str]:
    """Verified antimagic orientation of ``g`` and the name of the strategy used."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        strategy = choose_strategy(g)
    return _RUNNERS[strategy](g), strategy
