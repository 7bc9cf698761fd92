"""Test-instance factories.

Random graphs use numpy's PCG64 bit generator seeded with the given integer,
so a ``(n, k, seed)`` triple yields the same graph on every platform.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .graph_core import AntimagicError, InvalidGraphError, UndirectedGraph, components

RESAMPLE_BUDGET = 10_000


class GenerationError(AntimagicError, RuntimeError):
    kind = "generation-failed"


@dataclass(frozen=True)
class CycleSpec:
    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(r) for r in self.lengths))
        bad = [r for r in self.lengths if r < 3]
        if bad:
            raise InvalidGraphError(f"cycle lengths must be >= 3, got {bad}")
        if not self.lengths:
            raise InvalidGraphError("need at least one cycle")


def cycle_union(spec: CycleSpec | list[int] | tuple[int, ...]) -> UndirectedGraph:
    if not isinstance(spec, CycleSpec):
        spec = CycleSpec(tuple(spec))
    edges, base = [], 0
    for r in spec.lengths:
        edges.extend((base + k + 1, base + (k + 1) % r + 1) for k in range(r))
        base += r
    return UndirectedGraph(base, tuple(edges))


def circulant(n: int, offsets) -> UndirectedGraph:
    offsets = sorted(set(int(o) for o in offsets))
    if not offsets:
        raise InvalidGraphError("need at least one offset")
    for o in offsets:
        if not 1 <= o < n / 2:
            raise InvalidGraphError(f"offset {o} must satisfy 1 <= offset < n/2 (n={n})")
    edges = []
    for i in range(1, n + 1):
        for o in offsets:
            j = (i - 1 + o) % n + 1
            edges.append((i, j))
    return UndirectedGraph(n, tuple(edges))


def circulant_connected(n: int, offsets) -> bool:
    g = 0
    for o in offsets:
        g = gcd(g, o)
    return gcd(n, g) == 1


def random_regular(n: int, k: int, seed: int, connected: bool = False,
                   budget: int = RESAMPLE_BUDGET) -> UndirectedGraph:
    """Random simple k-regular graph from the pairing model.

    Stubs are paired one at a time, each time picking uniformly among the
    remaining stub pairs that create neither a loop nor a repeated edge;
    if none is left the whole sample is discarded. With ``connected`` a
    disconnected sample is discarded too. At most ``budget`` samples are
    drawn.
    """
    if n < 1 or k < 0 or k >= n:
        raise InvalidGraphError(f"need 0 <= k < n, got n={n}, k={k}")
    if n * k % 2:
        raise InvalidGraphError(f"n*k must be even, got n={n}, k={k}")
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(budget):
        edges = _pair_stubs(n, k, rng)
        if edges is None:
            continue
        g = UndirectedGraph(n, tuple(sorted(edges)))
        if connected and len(components(g)) > 1:
            continue
        return g
    raise GenerationError(f"no simple{' connected' if connected else ''} {k}-regular graph on {n} vertices after {budget} samples")


def _pair_stubs(n: int, k: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    stubs = [v for v in range(1, n + 1) for _ in range(k)]
    edges: set[tuple[int, int]] = set()
    while stubs:
        # fast path: a random pair is usually fine
        for _ in range(50):
            i, j = rng.choice(len(stubs), size=2, replace=False)
            u, v = stubs[i], stubs[j]
            if u != v and (min(u, v), max(u, v)) not in edges:
                break
        else:
            ok = [(i, j) for i in range(len(stubs)) for j in range(i + 1, len(stubs))
                  if stubs[i] != stubs[j] and (min(stubs[i], stubs[j]), max(stubs[i], stubs[j])) not in edges]
            if not ok:
                return None
            i, j = ok[rng.integers(len(ok))]
            u, v = stubs[i], stubs[j]
        edges.add((min(u, v), max(u, v)))
        for idx in sorted((i, j), reverse=True):
            stubs[idx] = stubs[-1]
            stubs.pop()
    return edges
