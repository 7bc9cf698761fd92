"""Graph, digraph and labeling types plus the definition-level antimagic check.

Vertices are 1-based integers everywhere, including the text formats.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

MAX_EDGES = 10**6


class AntimagicError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"


class InvalidGraphError(AntimagicError, ValueError):
    kind = "invalid-graph"


class InvalidLabelingError(AntimagicError, ValueError):
    kind = "invalid-labeling"


class ParseError(AntimagicError, ValueError):
    kind = "parse-error"


class ConstructionFailure(AntimagicError, RuntimeError):
    """A construction produced something that fails verification.

    ``state`` carries whatever the construction had at the point of failure.
    """

    kind = "construction-failure"

    def __init__(self, message: str, state: dict | None = None):
        super().__init__(message)
        self.state = state or {}


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph on vertices ``1..n``. Edge ids are positions in ``edges``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise InvalidGraphError(f"vertex count must be positive, got {self.n}")
        if len(edges) > MAX_EDGES:
            raise InvalidGraphError(f"too many edges: {len(edges)} > {MAX_EDGES}")
        seen = set()
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            key = _norm(u, v)
            if key in seen:
                raise InvalidGraphError(f"parallel edge {key}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices(), 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices()}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def subgraph(self, vertices: Iterable[int]) -> tuple[UndirectedGraph, list[int]]:
        """Induced subgraph relabelled to ``1..k``; also returns the new->old id map."""
        old = sorted(vertices)
        new_id = {v: i for i, v in enumerate(old, start=1)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return UndirectedGraph(len(old), tuple(edges)), old


class Arc(NamedTuple):
    tail: int
    head: int
    label: int


@dataclass(frozen=True)
class LabeledDigraph:
    """An orientation of a simple graph together with an arc labeling.

    Construction checks the structure only; whether the labels form a
    bijection onto ``1..m`` is checked by :func:`vertex_sums`, so that a
    broken labeling can still be loaded and reported on.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(Arc(int(t), int(h), int(c)) for t, h, c in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        # reuse the simple-graph checks on the underlying edge set
        UndirectedGraph(self.n, tuple((a.tail, a.head) for a in arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, tuple((a.tail, a.head) for a in self.arcs))

    def reversed(self) -> LabeledDigraph:
        return LabeledDigraph(self.n, tuple(Arc(a.head, a.tail, a.label) for a in self.arcs))


@dataclass(frozen=True)
class VertexSumReport:
    sums: dict[int, int]
    duplicates: list[list[int]] = field(default_factory=list)

    @property
    def antimagic(self) -> bool:
        return not self.duplicates


def check_labels(arcs: Iterable[Arc], m: int | None = None) -> None:
    labels = sorted(a.label for a in arcs)
    m = len(labels) if m is None else m
    if labels != list(range(1, m + 1)):
        missing = sorted(set(range(1, m + 1)) - set(labels))
        repeated = sorted(c for c, k in Counter(labels).items() if k > 1)
        raise InvalidLabelingError(
            f"labels are not a bijection onto 1..{m} (missing={missing[:10]}, repeated={repeated[:10]})"
        )


def vertex_sums(d: LabeledDigraph) -> dict[int, int]:
    """In-label total minus out-label total at every vertex."""
    check_labels(d.arcs, d.m)
    sums = dict.fromkeys(range(1, d.n + 1), 0)
    for tail, head, label in d.arcs:
        sums[head] += label
        sums[tail] -= label
    return sums


def duplicate_groups(sums: dict[int, int]) -> list[list[int]]:
    """Groups of vertices sharing a sum, ordered by the shared value."""
    by_value: dict[int, list[int]] = defaultdict(list)
    for v, s in sums.items():
        by_value[s].append(v)
    return [sorted(by_value[s]) for s in sorted(by_value) if len(by_value[s]) > 1]


def check_antimagic(d: LabeledDigraph) -> VertexSumReport:
    sums = vertex_sums(d)
    return VertexSumReport(sums, duplicate_groups(sums))


def components(g: UndirectedGraph) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest member."""
    adj = g.adjacency()
    seen: set[int] = set()
    out = []
    for root in g.vertices():
        if root in seen:
            continue
        seen.add(root)
        stack, comp = [root], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def degree_profile(g: UndirectedGraph) -> dict[int, int]:
    return dict(sorted(Counter(g.degrees().values()).items()))


# ---------------------------------------------------------------------------
# text formats


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return rows


def _ints(row: list[str], width: int, lineno: int) -> list[int]:
    if len(row) != width:
        raise ParseError(f"record {lineno}: expected {width} integers, got {' '.join(row)!r}")
    try:
        return [int(x) for x in row]
    except ValueError:
        raise ParseError(f"record {lineno}: non-integer field in {' '.join(row)!r}") from None


def _header(rows: list[list[str]]) -> tuple[int, int]:
    if not rows:
        raise ParseError("empty input: missing 'n m' header")
    n, m = _ints(rows[0], 2, 0)
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} records but {len(rows) - 1} follow")
    return n, m


def parse_edge_list(text: str) -> UndirectedGraph:
    rows = _data_lines(text)
    n, _ = _header(rows)
    edges = [tuple(_ints(r, 2, i)) for i, r in enumerate(rows[1:], start=1)]
    return UndirectedGraph(n, tuple(edges))


def format_edge_list(g: UndirectedGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_labeled_digraph(text: str) -> LabeledDigraph:
    rows = _data_lines(text)
    n, _ = _header(rows)
    arcs = [Arc(*_ints(r, 3, i)) for i, r in enumerate(rows[1:], start=1)]
    return LabeledDigraph(n, tuple(arcs))


def format_labeled_digraph(d: LabeledDigraph) -> str:
    lines = [f"{d.n} {d.m}"] + [f"{a.tail} {a.head} {a.label}" for a in d.arcs]
    return "\n".join(lines) + "\n"
