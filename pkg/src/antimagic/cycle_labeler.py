"""Antimagic orientations of 2-regular graphs (disjoint unions of cycles).

Cycles are ordered odd-first, each block by nondecreasing length, and every
cycle is read as ``v_1, ..., v_r`` starting at its smallest vertex. Cycle
and position indices below are 1-based to match that reading.

Orientation: edge ``v_j v_{j+1}`` (j < r) points forward iff ``j`` is odd;
the closing edge points ``v_r -> v_1`` on odd cycles and ``v_1 -> v_r`` on
even ones.

Even cycles get fixed consecutive blocks above every odd-cycle label. Odd
cycles are split into a small half (cycles ``1..p``, ``p = s // 2``) and a
large half; each half pins the sums of the starting vertices to ``-i``
(small) or ``+j`` (large) and then floods its cycles outward with the
smallest (resp. largest) unused labels.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import accumulate

from .graph_core import (
    Arc,
    ConstructionFailure,
    InvalidGraphError,
    LabeledDigraph,
    UndirectedGraph,
    check_antimagic,
)


class NotTwoRegularError(InvalidGraphError):
    kind = "not-2-regular"


# An edge of cycle ``i`` is addressed as ``(i, j)``: the edge between
# positions ``j`` and ``j + 1`` (the closing edge is ``j = r``).
EdgeKey = tuple[int, int]


@dataclass(frozen=True)
class CycleList:
    cycles: tuple[tuple[int, ...], ...]
    s: int

    @property
    def t(self) -> int:
        return len(self.cycles) - self.s

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    @property
    def prefix(self) -> list[int]:
        """``[n_0, n_1, ..., n_{s+t}]`` with ``n_0 = 0``."""
        return [0, *accumulate(self.lengths)]

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def vertex(self, i: int, j: int) -> int:
        """Graph vertex at position ``j`` of cycle ``i``, both 1-based, ``j`` taken mod r."""
        cyc = self.cycles[i - 1]
        return cyc[(j - 1) % len(cyc)]


def decompose_and_order(g: UndirectedGraph) -> CycleList:
    deg = g.degrees()
    for v, k in deg.items():
        if k != 2:
            raise NotTwoRegularError(f"vertex {v} has degree {k}, expected 2")
    adj = g.adjacency()
    seen: set[int] = set()
    cycles = []
    for start in g.vertices():
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    # cycles are discovered in order of smallest vertex, so a stable sort breaks length ties by it
    odd = sorted((c for c in cycles if len(c) % 2), key=len)
    even = sorted((c for c in cycles if not len(c) % 2), key=len)
    return CycleList(tuple(odd + even), len(odd))


def edge_arc(cl: CycleList, i: int, j: int) -> tuple[int, int]:
    """(tail, head) of edge ``(i, j)`` under the fixed orientation."""
    r = len(cl.cycles[i - 1])
    a, b = cl.vertex(i, j), cl.vertex(i, j + 1)
    if j < r:
        return (a, b) if j % 2 else (b, a)
    # closing edge v_r v_1
    return (a, b) if r % 2 else (b, a)


def orient_2regular(cl: CycleList) -> dict[EdgeKey, tuple[int, int]]:
    return {
        (i, j): edge_arc(cl, i, j)
        for i in range(1, len(cl.cycles) + 1)
        for j in range(1, len(cl.cycles[i - 1]) + 1)
    }


def label_even_cycles(cl: CycleList) -> dict[EdgeKey, int]:
    prefix = cl.prefix
    labels = {}
    for i in range(cl.s + 1, len(cl.cycles) + 1):
        r, base = len(cl.cycles[i - 1]), prefix[i - 1]
        for j in range(1, r - 1):
            labels[i, j] = base + j
        labels[i, r - 1] = base + r
        labels[i, r] = base + r - 1
    return labels


@dataclass
class WavefrontState:
    """Bookkeeping for one half of the odd-cycle labeling.

    ``frontier`` is a heap of ``(key, edge)`` where ``key`` orders selection:
    the label itself on the small side, its negation on the large side.
    """

    cl: CycleList
    labels: dict[EdgeKey, int]
    used: set[int]
    largest_first: bool
    frontier: list[tuple[int, EdgeKey]] = field(default_factory=list)
    steps: int = 0
    _cursor: int = 0

    def assign(self, edge: EdgeKey, label: int) -> None:
        if label in self.used or not 1 <= label <= self.cl.prefix[self.cl.s]:
            raise ConstructionFailure(
                f"label {label} for edge {edge} is already used or out of range",
                state=self.snapshot(),
            )
        self.labels[edge] = label
        self.used.add(label)

    def next_unused(self) -> int:
        # the extremal unused label only moves inward, so resume from the last answer
        n_s = self.cl.prefix[self.cl.s]
        step = -1 if self.largest_first else 1
        c = self._cursor if self._cursor else (n_s if self.largest_first else 1)
        while 1 <= c <= n_s:
            if c not in self.used:
                self._cursor = c
                return c
            c += step
        raise ConstructionFailure("ran out of labels", state=self.snapshot())

    def push(self, edge: EdgeKey) -> None:
        c = self.labels[edge]
        heapq.heappush(self.frontier, (-c if self.largest_first else c, edge))

    def unlabeled_neighbor(self, edge: EdgeKey) -> EdgeKey | None:
        i, j = edge
        r = len(self.cl.cycles[i - 1])
        for k in (j - 1 if j > 1 else r, j + 1 if j < r else 1):
            if (i, k) not in self.labels:
                return (i, k)
        return None

    def flood(self) -> None:
        """Spread extremal unused labels from the frontier until it is exhausted."""
        while self.frontier:
            _, e_star = heapq.heappop(self.frontier)
            e = self.unlabeled_neighbor(e_star)
            if e is None:
                continue  # its cycle is complete: retire it
            self.assign(e, self.next_unused())
            self.steps += 1
            self.push(e)

    def snapshot(self) -> dict:
        return {
            "labels": dict(self.labels),
            "used": sorted(self.used),
            "frontier": sorted(self.frontier),
            "largest_first": self.largest_first,
        }


def label_odd_cycles(cl: CycleList) -> dict[EdgeKey, int]:
    """Label the odd cycles with ``1..n_s``."""
    return _label_odd_cycles(cl)[0]


def _label_odd_cycles(cl: CycleList) -> tuple[dict[EdgeKey, int], WavefrontState, WavefrontState]:
    s = cl.s
    p = s // 2
    n_s = cl.prefix[s]
    labels: dict[EdgeKey, int] = {}
    used: set[int] = set()
    small = WavefrontState(cl, labels, used, largest_first=False)
    large = WavefrontState(cl, labels, used, largest_first=True)
    if s == 0:
        return labels, small, large

    def entering(i):
        return (i, len(cl.cycles[i - 1]))

    def leaving(i):
        return (i, 1)

    # seeds; with p == 0 the small half is empty and only the large seeds apply
    if p >= 1:
        small.assign(entering(1), 1)
        small.assign(leaving(1), 2)
    large.assign(entering(p + 1), n_s)
    large.assign(leaving(p + 1), n_s - 1)

    for i in range(2, p + 1):
        alpha = small.next_unused()
        small.assign(entering(i), alpha)
        small.assign(leaving(i), alpha + i)  # sum at v_{i,1} is -i
    for i in range(1, p + 1):
        small.push(entering(i))
        small.push(leaving(i))
    small.flood()

    for j in range(p + 2, s + 1):
        beta = large.next_unused()
        large.assign(entering(j), beta)
        large.assign(leaving(j), beta - (j - p))  # sum at v_{j,1} is j - p
    for j in range(p + 1, s + 1):
        large.push(entering(j))
        large.push(leaving(j))
    large.flood()

    if sorted(labels.values()) != list(range(1, n_s + 1)):
        raise ConstructionFailure("odd-cycle labels do not cover 1..n_s", state=small.snapshot())
    return labels, small, large


def wavefront_steps(cl: CycleList) -> tuple[int, int]:
    """Number of flood assignments made on the (small, large) side."""
    _, small, large = _label_odd_cycles(cl)
    return small.steps, large.steps


def antimagic_orient_2regular(g: UndirectedGraph) -> LabeledDigraph:
    cl = decompose_and_order(g)
    arcs_by_edge = orient_2regular(cl)
    labels = label_even_cycles(cl) | label_odd_cycles(cl)
    arcs = tuple(Arc(*arcs_by_edge[e], labels[e]) for e in sorted(arcs_by_edge))
    d = LabeledDigraph(g.n, arcs)
    report = check_antimagic(d)
    if not report.antimagic:
        raise ConstructionFailure(
            f"2-regular construction is not antimagic: duplicates {report.duplicates}",
            state={"cycles": cl.cycles, "labels": labels},
        )
    return d
