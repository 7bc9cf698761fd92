"""Exhaustive search for antimagic orientations of tiny graphs.

This module deliberately imports nothing from the constructions; it only
knows the definition. Orientations are bitmasks (bit ``i`` set means edge
``i`` is reversed relative to the input order) tried in ascending order, and
labelings are permutations tried in lexicographic order, built arc by arc.

A branch is cut as soon as a vertex whose incident arcs are all labelled
repeats the sum of another such vertex. A finished vertex's sum never
changes, so no completion of that branch can be antimagic and the cut loses
nothing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph_core import AntimagicError, Arc, LabeledDigraph, UndirectedGraph


class LimitExceeded(AntimagicError, RuntimeError):
    kind = "limit-exceeded"


@dataclass(frozen=True)
class SearchLimits:
    max_edges: int = 8
    max_states: int = 50_000_000
    find_all: bool = False
    prune: bool = True

    def __post_init__(self):
        if self.max_edges < 1 or self.max_states < 1:
            raise ValueError("max_edges and max_states must be positive")


@dataclass
class SearchResult:
    witnesses: list[LabeledDigraph]
    states: int

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    @property
    def first(self) -> LabeledDigraph | None:
        return self.witnesses[0] if self.witnesses else None


def search(g: UndirectedGraph, limits: SearchLimits = SearchLimits()) -> SearchResult:
    m, n = g.m, g.n
    if m > limits.max_edges:
        raise LimitExceeded(f"graph has {m} edges; limit is {limits.max_edges}")
    witnesses: list[LabeledDigraph] = []
    states = 0

    remaining0 = [0] * (n + 1)
    for u, v in g.edges:
        remaining0[u] += 1
        remaining0[v] += 1
    isolated_zero = sum(1 for v in range(1, n + 1) if remaining0[v] == 0)
    if isolated_zero > 1 and limits.prune:
        # several isolated vertices all sit at sum 0 whatever we do
        return SearchResult([], 0)

    for mask in range(1 << m):
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(g.edges)]
        sums = [0] * (n + 1)
        remaining = remaining0[:]
        finished: dict[int, int] = {}  # sum -> count among finished vertices
        clashes = 0
        for v in range(1, n + 1):
            if remaining[v] == 0:
                clashes += finished.get(0, 0) > 0
                finished[0] = finished.get(0, 0) + 1
        labels = [0] * m
        free = [True] * (m + 1)

        def finish(v: int) -> None:
            nonlocal clashes
            k = finished.get(sums[v], 0)
            clashes += k > 0
            finished[sums[v]] = k + 1

        def unfinish(v: int) -> None:
            nonlocal clashes
            k = finished[sums[v]] - 1
            finished[sums[v]] = k
            clashes -= k > 0

        def extend(i: int) -> bool:
            """Label arc ``i`` onward; True means stop the whole search."""
            nonlocal states
            states += 1
            if states > limits.max_states:
                raise LimitExceeded(f"explored more than {limits.max_states} states")
            if i == m:
                if clashes == 0:
                    witnesses.append(LabeledDigraph(
                        n, tuple(Arc(t, h, c) for (t, h), c in zip(arcs, labels))))
                    return not limits.find_all
                return False
            tail, head = arcs[i]
            for c in range(1, m + 1):
                if not free[c]:
                    continue
                free[c] = False
                labels[i] = c
                sums[head] += c
                sums[tail] -= c
                remaining[head] -= 1
                remaining[tail] -= 1
                done = [v for v in (tail, head) if remaining[v] == 0]
                for v in done:
                    finish(v)
                stop = False
                if not (limits.prune and clashes):
                    stop = extend(i + 1)
                for v in reversed(done):
                    unfinish(v)
                remaining[head] += 1
                remaining[tail] += 1
                sums[head] -= c
                sums[tail] += c
                free[c] = True
                if stop:
                    return True
            return False

        if extend(0):
            break
    return SearchResult(witnesses, states)


def brute_force_antimagic_orientation(
    g: UndirectedGraph, limits: SearchLimits = SearchLimits()
) -> LabeledDigraph | list[LabeledDigraph] | None:
    """First witness (or every witness with ``find_all``); None if there is none."""
    result = search(g, limits)
    if limits.find_all:
        return result.witnesses
    return result.first
