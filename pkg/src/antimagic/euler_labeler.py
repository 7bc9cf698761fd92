"""Antimagic orientations of connected even-degree graphs via an Euler tour.

The tour is treated as a cycle of ``m`` positions; position ``k`` is where
tour step ``k`` starts and step ``k`` joins positions ``k`` and ``k + 1``
(mod ``m``). One occurrence of every vertex is "real" and the rest are
imaginary copies. The real occurrences split the tour into ``n`` paths whose
interiors are imaginary, the paths are oriented alternately, and each path
takes a consecutive block of labels increasing along its direction. Every
imaginary copy then has sum -1, so collapsing the tour back onto the graph
shifts each real sum by the same small constant.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph_core import (
    AntimagicError,
    Arc,
    ConstructionFailure,
    InvalidGraphError,
    LabeledDigraph,
    UndirectedGraph,
    check_antimagic,
    components,
)


class OddDegreeError(InvalidGraphError):
    kind = "odd-degree"


class DisconnectedError(InvalidGraphError):
    kind = "disconnected"


class DegreeSetError(InvalidGraphError):
    kind = "degree-set"


class UnsupportedClassError(AntimagicError, ValueError):
    kind = "unsupported-class"


Step = tuple[int, int, int]  # (from, to, edge id)


@dataclass(frozen=True)
class EulerTour:
    steps: tuple[Step, ...]

    @property
    def m(self) -> int:
        return len(self.steps)

    def vertex_at(self, pos: int) -> int:
        return self.steps[pos % self.m][0]

    @cached_property
    def occurrences(self) -> dict[int, list[int]]:
        occ: dict[int, list[int]] = {}
        for pos, (u, _, _) in enumerate(self.steps):
            occ.setdefault(u, []).append(pos)
        return occ


def euler_tour(g: UndirectedGraph) -> EulerTour:
    """Deterministic Hierholzer tour.

    Starts at vertex 1, always leaves along the smallest-id unused edge, and
    splices each sub-tour in at the earliest tour position that still has an
    unused edge.
    """
    deg = g.degrees()
    for v, k in deg.items():
        if k % 2 or k == 0:
            raise OddDegreeError(f"vertex {v} has degree {k}; need even degree >= 2")
    if len(components(g)) > 1:
        raise DisconnectedError("graph is not connected")

    incident: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)
    cursor = dict.fromkeys(g.vertices(), 0)
    used = [False] * g.m

    def next_edge(v: int) -> int | None:
        lst, i = incident[v], cursor[v]
        while i < len(lst) and used[lst[i]]:
            i += 1
        cursor[v] = i
        return lst[i] if i < len(lst) else None

    def closed_walk(start: int) -> list[Step]:
        walk, v = [], start
        while (eid := next_edge(v)) is not None:
            used[eid] = True
            a, b = g.edges[eid]
            w = b if a == v else a
            walk.append((v, w, eid))
            v = w
        assert v == start
        return walk

    tour = closed_walk(1)
    pos = 0
    while len(tour) < g.m:
        while next_edge(tour[pos][0]) is None:
            pos += 1
        tour[pos:pos] = closed_walk(tour[pos][0])
    return EulerTour(tuple(tour))


def renaming_sequence(n: int) -> np.ndarray:
    """Index given to the k-th real vertex around the tour.

    Evens climb from 2, the top one or two indices turn the corner, and the
    odds come back down to 3: ``[1, 2, 4, 6, 5, 3]`` for 6 and
    ``[1, 2, 4, 5, 3]`` for 5.
    """
    if n <= 2:
        return np.arange(1, n + 1)
    top = n if n % 2 == 0 else n - 1
    return np.concatenate(([1], np.arange(2, top + 1, 2), np.arange(n - 1 if n % 2 == 0 else n, 2, -2)))


def good_pair_ordinals(seq: np.ndarray) -> np.ndarray:
    """Labeling-order position of the path between each cyclically consecutive pair.

    -1 marks a pair that is not a good pair.
    """
    n = len(seq)
    nxt = np.roll(seq, -1)
    lo, gap = np.minimum(seq, nxt), np.abs(seq - nxt)
    out = np.where(gap == 2, lo, -1)
    out[(gap == 1) & (lo == 1)] = 0
    out[(gap == 1) & (lo == n - 1)] = n - 1
    return out


def good_pairs(seq) -> list[tuple[int, int]]:
    """Cyclically consecutive entries of ``seq`` as sorted pairs."""
    seq = [int(x) for x in seq]
    n = len(seq)
    return [tuple(sorted((seq[k], seq[(k + 1) % n]))) for k in range(n)]


def path_ordinal(pair: tuple[int, int], n: int) -> int:
    """Position of the path joining ``pair`` in the labeling order."""
    i, j = pair
    if (i, j) == (1, 2):
        return 0
    if j - i == 2:
        return i
    if (i, j) == (n - 1, n):
        return n - 1
    raise ConstructionFailure(f"({i}, {j}) is not a good pair for n={n}")


@dataclass(frozen=True)
class RealAssignment:
    real_position: dict[int, int]
    paper_index: dict[int, int]

    @cached_property
    def positions_in_order(self) -> list[int]:
        return sorted(self.real_position.values())

    @cached_property
    def vertex_of_index(self) -> dict[int, int]:
        return {i: v for v, i in self.paper_index.items()}

    def imaginary_positions(self, m: int) -> list[int]:
        real = set(self.real_position.values())
        return [p for p in range(m) if p not in real]


def assign_real_and_rename(tour: EulerTour) -> RealAssignment:
    real = {}
    for pos, (u, _, _) in enumerate(tour.steps):
        real.setdefault(u, pos)
    seq = renaming_sequence(len(real)).tolist()
    order = sorted(real, key=real.get)
    return RealAssignment(real, {v: seq[k] for k, v in enumerate(order)})


@dataclass(frozen=True)
class TourPath:
    """Stretch of the tour between the real positions ``start`` and ``end``.

    ``steps`` are tour step indices in tour order; ``forward`` is True when
    the path is directed along the tour (from ``start`` to ``end``).
    """

    name: tuple[int, int]
    ordinal: int
    k: int
    start: int
    end: int
    steps: tuple[int, ...]
    forward: bool = True

    @property
    def length(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PathSystem:
    n: int
    paths: tuple[TourPath, ...]  # in tour order, paths[k] leaves the k-th real position

    def by_ordinal(self) -> list[TourPath]:
        return sorted(self.paths, key=lambda p: p.ordinal)

    @property
    def lengths(self) -> list[int]:
        """Path lengths indexed by ordinal (``l_0, ..., l_{n-1}``)."""
        return [p.length for p in self.by_ordinal()]


def build_paths(tour: EulerTour, assignment: RealAssignment) -> PathSystem:
    positions = assignment.positions_in_order
    n, m = len(positions), tour.m
    paths = []
    for k, start in enumerate(positions):
        end = positions[(k + 1) % n]
        stop = end if end > start else end + m
        a = assignment.paper_index[tour.vertex_at(start)]
        b = assignment.paper_index[tour.vertex_at(end)]
        name = (min(a, b), max(a, b))
        paths.append(TourPath(name, path_ordinal(name, n), k, start, end % m, tuple(range(start, stop))))
    if sorted(p.ordinal for p in paths) != list(range(n)):
        raise ConstructionFailure(f"good-pair names are not distinct: {[p.name for p in paths]}")
    if sum(p.length for p in paths) != m:
        raise ConstructionFailure("paths do not partition the tour")
    return PathSystem(n, tuple(paths))


def orient_paths(ps: PathSystem) -> PathSystem:
    """Direct the k-th path along the tour for even k and against it for odd k."""
    return PathSystem(
        ps.n,
        tuple(
            TourPath(p.name, p.ordinal, p.k, p.start, p.end, p.steps, forward=(p.k % 2 == 0))
            for p in ps.paths
        ),
    )


def label_paths(ps: PathSystem, relabel_trick: bool = False) -> dict[int, int]:
    """Tour step -> label, one consecutive block per path in ordinal order.

    ``relabel_trick`` swaps the first two blocks so that the path with
    ordinal 1 takes the smallest labels.
    """
    order = ps.by_ordinal()
    if relabel_trick:
        order[0], order[1] = order[1], order[0]
    labels, nxt = {}, 1
    for p in order:
        steps = p.steps if p.forward else p.steps[::-1]
        for step in steps:
            labels[step] = nxt
            nxt += 1
    return labels


@dataclass(frozen=True)
class TourLabeling:
    """Oriented, labelled tour cycle before collapsing onto the graph."""

    tour: EulerTour
    assignment: RealAssignment
    paths: PathSystem
    labels: dict[int, int]

    @cached_property
    def step_forward(self) -> list[bool]:
        fwd = [True] * self.tour.m
        for p in self.paths.paths:
            for step in p.steps:
                fwd[step] = p.forward
        return fwd

    def position_arcs(self) -> list[tuple[int, int, int]]:
        m = self.tour.m
        out = []
        for k in range(m):
            a, b = k, (k + 1) % m
            out.append((a, b, self.labels[k]) if self.step_forward[k] else (b, a, self.labels[k]))
        return out

    def position_sums(self) -> list[int]:
        sums = [0] * self.tour.m
        for tail, head, c in self.position_arcs():
            sums[head] += c
            sums[tail] -= c
        return sums

    def out_degrees(self) -> list[int]:
        out = [0] * self.tour.m
        for tail, _, _ in self.position_arcs():
            out[tail] += 1
        return out

    def index_sums(self) -> dict[int, int]:
        """Tour-cycle sum at each real vertex, keyed by its renamed index."""
        sums = self.position_sums()
        return {
            self.assignment.paper_index[v]: sums[pos]
            for v, pos in self.assignment.real_position.items()
        }

    def collapse(self, n: int) -> LabeledDigraph:
        arcs = []
        for k, (u, w, _) in enumerate(self.tour.steps):
            c = self.labels[k]
            arcs.append(Arc(u, w, c) if self.step_forward[k] else Arc(w, u, c))
        return LabeledDigraph(n, tuple(arcs))


def check_even_degree_set(g: UndirectedGraph) -> int:
    """Return ``d`` when the degree set is ``{2d}`` or ``{2d, 2d-2}`` with ``d >= 2``."""
    degs = set(g.degrees().values())
    odd = sorted(k for k in degs if k % 2)
    if odd:
        v = next(v for v, k in g.degrees().items() if k % 2)
        raise OddDegreeError(f"vertex {v} has odd degree {g.degrees()[v]}")
    top = max(degs)
    if top < 4:
        raise DegreeSetError(f"degree set {sorted(degs)} is 2-regular; use the cycle construction")
    if not degs <= {top, top - 2}:
        raise DegreeSetError(f"degree set {sorted(degs)} is not of the form {{2d}} or {{2d, 2d-2}}")
    return top // 2


def tour_labeling(g: UndirectedGraph, relabel_trick: bool = False) -> TourLabeling:
    tour = euler_tour(g)
    assignment = assign_real_and_rename(tour)
    paths = orient_paths(build_paths(tour, assignment))
    return TourLabeling(tour, assignment, paths, label_paths(paths, relabel_trick))


def _verified(d: LabeledDigraph, what: str) -> LabeledDigraph:
    report = check_antimagic(d)
    if not report.antimagic:
        raise ConstructionFailure(f"{what} is not antimagic: duplicates {report.duplicates}",
                                  state={"sums": report.sums})
    return d


def antimagic_orient_connected_even(g: UndirectedGraph) -> LabeledDigraph:
    check_even_degree_set(g)
    if len(components(g)) > 1:
        raise DisconnectedError("graph is not connected; see antimagic_orient_components")
    return _verified(tour_labeling(g).collapse(g.n), "Euler-tour construction")


def label_components(g: UndirectedGraph, relabel_trick: bool = True) -> LabeledDigraph:
    """Per-component tour construction with offset label blocks, unverified.

    Odd components come first. With two odd components and ``relabel_trick``
    the first one has its two lowest blocks swapped.
    """
    degs = set(g.degrees().values())
    if len(degs) != 1:
        raise DegreeSetError(f"multi-component construction needs a regular graph, got degrees {sorted(degs)}")
    check_even_degree_set(g)
    comps = components(g)
    odd = [c for c in comps if len(c) % 2]
    even = [c for c in comps if not len(c) % 2]
    if len(odd) > 2:
        raise UnsupportedClassError(
            f"{len(odd)} odd components; the construction covers at most two odd components"
        )
    arcs, offset = [], 0
    for idx, comp in enumerate(odd + even):
        sub, old = g.subgraph(comp)
        trick = relabel_trick and len(odd) == 2 and idx == 0
        local = tour_labeling(sub, relabel_trick=trick).collapse(sub.n)
        arcs.extend(Arc(old[a.tail - 1], old[a.head - 1], a.label + offset) for a in local.arcs)
        offset += sub.m
    return LabeledDigraph(g.n, tuple(arcs))


def antimagic_orient_components(g: UndirectedGraph) -> LabeledDigraph:
    return _verified(label_components(g, relabel_trick=True), "multi-component construction")
