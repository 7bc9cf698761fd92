"""Shared strategies and independent reference computations for the tests."""
import itertools

from hypothesis import strategies as st

from antimagic.graph_core import Arc, LabeledDigraph, UndirectedGraph


def partitions_min3(total, smallest=3):
    """Multisets of integers >= 3 summing to ``total`` (nondecreasing order)."""
    if total == 0:
        yield []
        return
    for k in range(smallest, total + 1):
        for rest in partitions_min3(total - k, k):
            yield [k, *rest]


def sums_by_definition(d):
    """Vertex sums straight from the definition, one vertex at a time."""
    return {
        v: sum(a.label for a in d.arcs if a.head == v) - sum(a.label for a in d.arcs if a.tail == v)
        for v in range(1, d.n + 1)
    }


@st.composite
def simple_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return UndirectedGraph(n, tuple(chosen))


@st.composite
def labeled_digraphs(draw, max_n=8):
    g = draw(simple_graphs(max_n))
    labels = draw(st.permutations(range(1, g.m + 1)))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    arcs = tuple(
        Arc(v, u, c) if f else Arc(u, v, c) for (u, v), c, f in zip(g.edges, labels, flips)
    )
    return LabeledDigraph(g.n, arcs)


def disjoint_union(*graphs):
    edges, base = [], 0
    for g in graphs:
        edges.extend((u + base, v + base) for u, v in g.edges)
        base += g.n
    return UndirectedGraph(base, tuple(edges))


def expected_tour_sum(lengths, n, i, out_degree):
    """Closed-form sum on the tour cycle at the real vertex renamed ``i``.

    ``lengths[k]`` is the length of the k-th path in labeling order.
    """
    def total(k):  # lengths[0] + ... + lengths[k]
        return sum(lengths[: k + 1])

    if i == 1:
        return -lengths[0] - 2 if n % 2 == 0 else lengths[0] + lengths[1] - 1
    if i == n:
        if n % 4 in (0, 3):
            return -2 * total(n - 3) - lengths[n - 2] - 2
        return 2 * total(n - 2) + lengths[n - 1]
    if out_degree == 0:
        return 2 * total(i - 2) + lengths[i - 1] + lengths[i]
    assert out_degree == 2
    return -2 * total(i - 3) - lengths[i - 2] - lengths[i - 1] - 2
