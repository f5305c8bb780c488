import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from kernelpaint import (
    ConstructionError,
    Graph,
    UndefinedStatisticError,
    block_decomposition,
    canonical_key,
    cut_size,
    enumerate_graphs,
    enumerate_triangle_free,
    graph_stats,
    make_named,
    ore_degree,
    to_dot,
)
from kernelpaint.errors import SizeLimitError


def test_graph_rejects_self_loops_and_range():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_degree_sum_is_twice_edge_count():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert sum(g.degrees) == 2 * g.m


def test_make_named_cycle_and_k4e():
    c5 = make_named("cycle", [5])
    assert c5.edges == frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})
    k4e = make_named("K4_minus_e")
    assert k4e.n == 4 and k4e.m == 5
    nonadj = [
        (u, v) for u, v in itertools.combinations(range(4), 2) if not k4e.has_edge(u, v)
    ]
    assert len(nonadj) == 1


def test_make_named_o5_degree_sequence():
    o5 = make_named("O_n", [5])
    assert sorted(o5.degrees, reverse=True) == [5, 5, 4, 4, 4, 4, 4, 4, 4]
    assert ore_degree(o5) == 9


def test_make_named_errors():
    with pytest.raises(ConstructionError):
        make_named("no_such_family")
    with pytest.raises(ConstructionError):
        make_named("O_n", [2])
    with pytest.raises(ConstructionError):
        make_named("cycle", [2])


def test_cut_size_examples(c4, k4e):
    assert cut_size(c4, {0, 2}, range(4)) == 4
    assert cut_size(c4, set(), range(4)) == 0
    k3 = make_named("complete", [3])
    assert cut_size(k3, range(3), range(3)) == 2 * k3.m


def test_cut_size_identity_and_symmetry():
    # ||A,B|| = ||A-B, B-A|| + 2||A&B|| + ||A&B, A^B||; the last term vanishes
    # for disjoint or equal sets, the two shapes the decomposition is used in.
    rng = random.Random(5)
    for g in enumerate_graphs(5):
        for _ in range(6):
            a = {v for v in range(g.n) if rng.random() < 0.5}
            b = {v for v in range(g.n) if rng.random() < 0.5}
            assert cut_size(g, a, b) == cut_size(g, b, a)
            both, symdiff = a & b, (a | b) - (a & b)
            assert cut_size(g, a, b) == (
                cut_size(g, a - b, b - a)
                + cut_size(g, both, both)
                + cut_size(g, both, symdiff)
            )
            if not cut_size(g, both, symdiff):
                assert cut_size(g, a, b) == cut_size(g, a - b, b - a) + cut_size(
                    g, both, both
                )
        full = set(range(g.n))
        assert cut_size(g, full, full) == 2 * g.m


def test_graph_stats_examples(k4):
    st_ = graph_stats(k4)
    assert (st_.ore_degree, st_.clique_number, st_.independence_number) == (6, 4, 1)
    assert st_.max_degree == st_.min_degree == 3
    p3 = make_named("path", [3])
    st_ = graph_stats(p3)
    assert st_.ore_degree == 3 and st_.triangle_free


def test_ore_degree_undefined_on_edgeless():
    with pytest.raises(UndefinedStatisticError):
        ore_degree(Graph(3))
    assert graph_stats(Graph(3)).ore_degree is None


def test_blocks_k3_p3_bowtie(bowtie):
    bt = block_decomposition(make_named("complete", [3]))
    assert bt.blocks == (frozenset({0, 1, 2}),) and not bt.cutvertices
    bt = block_decomposition(make_named("path", [3]))
    assert set(bt.blocks) == {frozenset({0, 1}), frozenset({1, 2})}
    assert bt.cutvertices == {1}
    bt = block_decomposition(bowtie)
    assert set(bt.blocks) == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
    assert bt.cutvertices == {2}


def test_blocks_partition_edges_and_isolated_vertices():
    for g in enumerate_graphs(6):
        bt = block_decomposition(g)
        per_edge = {}
        for i, b in enumerate(bt.blocks):
            for u, v in g.edges:
                if u in b and v in b:
                    per_edge.setdefault((u, v), []).append(i)
        assert all(len(ids) == 1 for ids in per_edge.values())
        assert len(per_edge) == g.m
        for b1, b2 in itertools.combinations(bt.blocks, 2):
            shared = b1 & b2
            assert len(shared) <= 1
            assert all(v in bt.cutvertices for v in shared)
        covered = set().union(*bt.blocks) if bt.blocks else set()
        assert covered == set(range(g.n))


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert sum(1 for _ in enumerate_graphs(4, connected_only=True)) == 6
    assert sum(1 for _ in enumerate_graphs(5)) == 34
    assert sum(1 for _ in enumerate_graphs(6)) == 156
    assert sum(1 for _ in enumerate_graphs(6, connected_only=True)) == 112
    with pytest.raises(SizeLimitError):
        list(enumerate_graphs(9))


def test_triangle_free_counts():
    expected = {4: 7, 5: 14, 6: 38, 7: 107}
    for n, count in expected.items():
        tf = list(enumerate_triangle_free(n))
        assert len(tf) == count
        assert all(not g.has_triangle() for g in tf)
    with pytest.raises(SizeLimitError):
        list(enumerate_triangle_free(10))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.randoms(use_true_random=False))
def test_canonical_key_is_relabeling_invariant(n, rnd):
    edges = [
        (u, v) for u, v in itertools.combinations(range(n), 2) if rnd.random() < 0.4
    ]
    g = Graph(n, edges)
    perm = list(range(n))
    rnd.shuffle(perm)
    h = Graph(n, [(perm[u], perm[v]) for u, v in edges])
    assert canonical_key(g) == canonical_key(h)


def test_canonical_key_separates_same_degree_sequence():
    # C6 versus two triangles: both 2-regular on six vertices
    c6 = make_named("cycle", [6])
    two_k3 = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(c6) != canonical_key(two_k3)


def test_to_dot_mentions_every_edge(c4):
    dot = to_dot(c4)
    assert dot.startswith("graph")
    assert dot.count(" -- ") == c4.m
