import pytest
from hypothesis import given, strategies as st

from antimagic.cycle_labeler import (
    NotTwoRegularError,
    WavefrontState,
    antimagic_orient_2regular,
    decompose_and_order,
    label_even_cycles,
    label_odd_cycles,
    orient_2regular,
    wavefront_steps,
)
from antimagic.generators import circulant, cycle_union
from antimagic.graph_core import (
    ConstructionFailure,
    LabeledDigraph,
    UndirectedGraph,
    check_antimagic,
)
from antimagic.oracle import SearchLimits, search

from .helpers import partitions_min3, sums_by_definition

# Hand execution of the odd-cycle flooding on C3 (1,2,3) + C5 (4..8):
# seeds 1, 2 on the triangle and 8, 7 on the pentagon, then 3 on the
# triangle and 6, 5, 4 around the pentagon.
C3_C5_ARCS = {
    (3, 1, 1), (1, 2, 2), (3, 2, 3),
    (8, 4, 8), (4, 5, 7), (8, 7, 6), (6, 5, 5), (6, 7, 4),
}
C3_C5_SUMS = {1: -1, 2: 5, 3: -4, 4: 1, 5: 12, 6: -9, 7: 10, 8: -14}


def relabel(g, perm):
    """``g`` with vertex ``v`` renamed ``perm[v - 1]``."""
    return UndirectedGraph(g.n, tuple((perm[u - 1], perm[v - 1]) for u, v in g.edges))


def test_decompose_orders_odd_then_even():
    cl = decompose_and_order(cycle_union([3, 5]))
    assert (cl.s, cl.t) == (2, 0)
    assert cl.lengths == [3, 5] and cl.prefix == [0, 3, 8]

    cl = decompose_and_order(cycle_union([6, 4]))
    assert (cl.s, cl.t) == (0, 2) and cl.lengths == [4, 6]

    cl = decompose_and_order(cycle_union([5, 4, 3]))
    assert (cl.s, cl.t) == (2, 1)
    assert cl.lengths == [3, 5, 4] and cl.prefix == [0, 3, 8, 12]


def test_decompose_canonical_start_and_direction():
    g = UndirectedGraph(5, ((5, 3), (3, 1), (1, 4), (4, 2), (2, 5)))
    cl = decompose_and_order(g)
    # starts at 1 and walks toward its smaller neighbour 3
    assert cl.cycles == ((1, 3, 5, 2, 4),)


def test_equal_length_ties_broken_by_smallest_vertex():
    g = UndirectedGraph(6, ((4, 5), (5, 6), (6, 4), (1, 2), (2, 3), (3, 1)))
    assert decompose_and_order(g).cycles == ((1, 2, 3), (4, 5, 6))


def test_not_two_regular():
    with pytest.raises(NotTwoRegularError, match="vertex 1"):
        decompose_and_order(UndirectedGraph(3, ((1, 2), (2, 3))))
    with pytest.raises(NotTwoRegularError):
        antimagic_orient_2regular(circulant(5, [1, 2]))


def test_orientation_examples():
    arcs = set(orient_2regular(decompose_and_order(cycle_union([3]))).values())
    assert arcs == {(1, 2), (3, 2), (3, 1)}
    arcs = set(orient_2regular(decompose_and_order(cycle_union([4]))).values())
    assert arcs == {(1, 2), (3, 2), (3, 4), (1, 4)}

    cl = decompose_and_order(cycle_union([6]))
    orient = orient_2regular(cl)
    forward = [j for j in range(1, 6) if orient[1, j] == (cl.vertex(1, j), cl.vertex(1, j + 1))]
    assert forward == [1, 3, 5]


@pytest.mark.parametrize("lengths", [[3], [5], [4], [6], [3, 5, 4, 6], [3, 3, 3, 3, 3]])
def test_orientation_degrees(lengths):
    cl = decompose_and_order(cycle_union(lengths))
    orient = orient_2regular(cl)
    out = {v: 0 for c in cl.cycles for v in c}
    for tail, _ in orient.values():
        out[tail] += 1
    for i, c in enumerate(cl.cycles, start=1):
        # the start vertex passes through on odd cycles and is a source on even ones
        assert out[c[0]] == (1 if i <= cl.s else 2)


def test_even_labels_lone_c4():
    cl = decompose_and_order(cycle_union([4]))
    labels = label_even_cycles(cl)
    assert labels == {(1, 1): 1, (1, 2): 2, (1, 3): 4, (1, 4): 3}
    arcs = orient_2regular(cl)
    d = LabeledDigraph(4, tuple((*arcs[e], c) for e, c in labels.items()))
    assert sums_by_definition(d) == {1: -4, 2: 3, 3: -6, 4: 7}


def test_even_labels_second_cycle_starts_after_first():
    labels = label_even_cycles(decompose_and_order(cycle_union([4, 6])))
    assert labels[2, 1] == 5
    assert sorted(labels.values()) == list(range(1, 11))


def test_odd_labels_lone_triangle():
    cl = decompose_and_order(cycle_union([3]))
    labels = label_odd_cycles(cl)
    assert labels == {(1, 3): 3, (1, 1): 2, (1, 2): 1}
    d = antimagic_orient_2regular(cycle_union([3]))
    assert check_antimagic(d).sums == {1: 1, 2: 3, 3: -4}


def test_fixed_trace_c3_c5():
    d = antimagic_orient_2regular(cycle_union([3, 5]))
    assert set(d.arcs) == C3_C5_ARCS
    assert sums_by_definition(d) == C3_C5_SUMS


def test_fixed_trace_is_oracle_witness():
    # the triangle's construction is one of the exhaustive search's witnesses
    g = cycle_union([3])
    built = set(antimagic_orient_2regular(g).arcs)
    witnesses = search(g, SearchLimits(find_all=True)).witnesses
    assert built in [set(w.arcs) for w in witnesses]


@pytest.mark.parametrize("lengths", [[3, 3, 4], [4], [3, 5], [3, 3], [5, 5, 5, 6, 8]])
def test_small_examples_verify(lengths):
    d = antimagic_orient_2regular(cycle_union(lengths))
    assert check_antimagic(d).antimagic
    assert sorted(a.label for a in d.arcs) == list(range(1, sum(lengths) + 1))


def test_start_vertex_targets_for_five_odd_cycles():
    g = cycle_union([3, 3, 5, 5, 7])
    cl = decompose_and_order(g)
    sums = check_antimagic(antimagic_orient_2regular(g)).sums
    assert [sums[c[0]] for c in cl.cycles] == [-1, -2, 1, 2, 3]


def test_collision_surfaces_as_construction_failure():
    cl = decompose_and_order(cycle_union([3]))
    state = WavefrontState(cl, {}, set(), largest_first=False)
    state.assign((1, 1), 2)
    with pytest.raises(ConstructionFailure) as info:
        state.assign((1, 2), 2)
    assert info.value.state["used"] == [2]


ALL_SMALL = [p for n in range(3, 16) for p in partitions_min3(n)]


@pytest.mark.parametrize("lengths", ALL_SMALL, ids=lambda p: "-".join(map(str, p)))
def test_structure_of_every_small_union(lengths):
    g = cycle_union(lengths)
    cl = decompose_and_order(g)
    d = antimagic_orient_2regular(g)
    sums = check_antimagic(d).sums
    prefix, s, p = cl.prefix, cl.s, cl.s // 2
    n_s = prefix[s]

    # even-cycle closed forms
    for i in range(s + 1, len(cl.cycles) + 1):
        r, base = cl.lengths[i - 1], prefix[i - 1]
        assert sums[cl.vertex(i, 1)] == -(2 * base + r)
        assert sums[cl.vertex(i, r - 1)] == -(2 * base + 2 * r - 2)
        for j in [*range(2, r - 1), r]:
            sign = 1 if j % 2 == 0 else -1
            assert sums[cl.vertex(i, j)] == sign * (2 * base + 2 * j - 1)

    # magnitude separation between odd-cycle and even-cycle vertices
    if s:
        odd_vertices = [v for c in cl.cycles[:s] for v in c]
        even_vertices = [v for c in cl.cycles[s:] for v in c]
        assert all(abs(sums[v]) <= 2 * n_s - 1 for v in odd_vertices)
        assert all(abs(sums[v]) >= 2 * n_s + 3 for v in even_vertices)

    # start-vertex targets
    assert [sums[cl.vertex(i, 1)] for i in range(1, p + 1)] == [-i for i in range(1, p + 1)]
    assert [sums[cl.vertex(p + j, 1)] for j in range(1, s - p + 1)] == list(range(1, s - p + 1))

    # each flood fills exactly the edges its seeds left open
    small, large = wavefront_steps(cl)
    assert small == prefix[p] - 2 * p
    assert large == n_s - prefix[p] - 2 * (s - p)


@given(
    st.lists(st.integers(3, 9), min_size=1, max_size=5),
    st.randoms(use_true_random=False),
)
def test_vertex_names_do_not_matter(lengths, rnd):
    g = cycle_union(lengths)
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    d = antimagic_orient_2regular(relabel(g, perm))
    assert check_antimagic(d).antimagic
    assert {frozenset((a.tail, a.head)) for a in d.arcs} == {frozenset(e) for e in relabel(g, perm).edges}


def test_deterministic():
    g = cycle_union([3, 5, 4, 7, 3])
    assert antimagic_orient_2regular(g) == antimagic_orient_2regular(g)
