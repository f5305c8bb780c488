import itertools

import pytest

from kernelpaint import (
    Digraph,
    Graph,
    alon_tarsi_diff,
    build_kernel_perfect,
    digraph_to_dot,
    enumerate_graphs,
    extend_d0_kp,
    find_kernel,
    is_f_AT,
    is_f_KP,
    is_kernel_perfect,
    make_named,
    orient_with_indegrees,
)
from kernelpaint.errors import SizeLimitError
from kernelpaint.graphs import cut_size


# -- digraph basics -----------------------------------------------------------


def test_digraph_rejects_self_arcs_and_strays():
    with pytest.raises(ValueError):
        Digraph(range(3), [(1, 1)])
    with pytest.raises(ValueError):
        Digraph(range(2), [(0, 5)])


def test_digraph_degrees_and_doubling():
    d = Digraph(range(3), [(0, 1), (1, 0), (1, 2)])
    assert d.out_degree(1) == 2 and d.in_degree(0) == 1
    assert d.doubled_pairs() == {(0, 1)}
    assert d.underlying_edges() == {(0, 1), (1, 2)}
    assert digraph_to_dot(d).count("->") == 3


# -- in-degree constrained orientations ---------------------------------------


def test_orient_examples(c4):
    res = orient_with_indegrees(c4, [1, 1, 1, 1])
    assert res.ok and all(res.orientation.in_degree(v) >= 1 for v in range(4))
    res = orient_with_indegrees(make_named("complete", [3]), [2, 2, 2])
    assert not res.ok and res.violating_set == {0, 1, 2} and res.deficiency == 3
    star = make_named("complete_bipartite", [1, 3])
    res = orient_with_indegrees(star, {0: 3, 1: 0, 2: 0, 3: 0})
    assert res.ok and res.orientation.in_degree(0) == 3


def test_orient_agrees_with_brute_force_n4():
    for g in enumerate_graphs(4):
        edges = sorted(g.edges)
        for dem in itertools.product(*[range(d + 1) for d in g.degrees]):
            res = orient_with_indegrees(g, dem)
            brute = False
            for pick in range(1 << len(edges)):
                indeg = [0] * g.n
                for i, (u, v) in enumerate(edges):
                    indeg[v if pick >> i & 1 else u] += 1
                if all(indeg[v] >= dem[v] for v in range(g.n)):
                    brute = True
                    break
            assert res.ok == brute
            if not res.ok:
                x = res.violating_set
                inside = cut_size(g, x, x) // 2
                crossing = cut_size(g, x, set(range(g.n)) - x)
                assert inside + crossing < sum(dem[v] for v in x)


def test_orient_rejects_negative_demand(c4):
    with pytest.raises(ValueError):
        orient_with_indegrees(c4, [-1, 0, 0, 0])


# -- kernel-perfect construction ----------------------------------------------


def test_build_kernel_perfect_c4(c4):
    res = build_kernel_perfect(c4, [0, 2], c4.degrees)
    assert res.ok
    d = res.digraph
    assert all(d.out_degree(v) == 1 for v in range(4))
    assert is_kernel_perfect(d)


def test_build_kernel_perfect_single_vertex():
    res = build_kernel_perfect(Graph(1), [0], {0: 1})
    assert res.ok and res.digraph.arcs == ()


def test_build_kernel_perfect_c5_always_fails(c5):
    for k in (1, 2):
        for a in itertools.combinations(range(5), k):
            if any(c5.has_edge(u, v) for u, v in itertools.combinations(a, 2)):
                continue
            res = build_kernel_perfect(c5, a, c5.degrees)
            assert not res.ok and res.violating_set


def test_build_kernel_perfect_validates_inputs(c4):
    with pytest.raises(ValueError, match="independent"):
        build_kernel_perfect(c4, [0, 1], c4.degrees)
    with pytest.raises(ValueError, match="outside"):
        build_kernel_perfect(c4, [0], {0: 9, 1: 2, 2: 2, 3: 2})


def test_build_kernel_perfect_doubles_outside_a():
    bow = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    res = build_kernel_perfect(bow, [], [d + 1 for d in bow.degrees])
    assert res.ok
    assert res.digraph.doubled_pairs() == bow.edges
    assert is_kernel_perfect(res.digraph)


# -- kernels ------------------------------------------------------------------


def test_find_kernel_examples():
    # composite shape on K4-e: doubled 0<->1, single arcs 0->2, 3->0, 2->1, 1->3
    d = Digraph(range(4), [(0, 1), (1, 0), (0, 2), (3, 0), (2, 1), (1, 3)])
    assert find_kernel(d, a=[2, 3]) == {2, 3}
    assert find_kernel(Digraph(range(3)), a=[]) == {0, 1, 2}
    assert find_kernel(Digraph(range(3), [(0, 1), (1, 2), (2, 0)])) is None


def test_find_kernel_shape_checks():
    undoubled = Digraph(range(3), [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="doubled"):
        find_kernel(undoubled, a=[0])
    bad_a = Digraph(range(3), [(0, 1), (1, 0), (1, 2), (2, 1)])
    with pytest.raises(ValueError, match="independent"):
        find_kernel(bad_a, a=[1, 2])


def test_constructive_kernels_match_exhaustive_checker():
    def confirm_kernel(g, d, kernel):
        out = {t: set() for t in range(g.n)}
        for t, h in d.arcs:
            out[t].add(h)
        assert all(not g.has_edge(u, v) for u in kernel for v in kernel if u < v)
        assert all(out[v] & kernel for v in range(g.n) if v not in kernel)

    for n in range(2, 7):
        for g in enumerate_graphs(n, connected_only=True):
            for k in (1, 2):
                for a in itertools.combinations(range(g.n), k):
                    if any(g.has_edge(u, v) for u, v in itertools.combinations(a, 2)):
                        continue
                    for f in ([d + 1 for d in g.degrees], list(g.degrees)):
                        res = build_kernel_perfect(g, a, f)
                        if not res.ok:
                            continue
                        confirm_kernel(g, res.digraph, find_kernel(res.digraph, a=a))
                        exhaustive = find_kernel(res.digraph)
                        assert exhaustive is not None
                        confirm_kernel(g, res.digraph, exhaustive)


def test_is_kernel_perfect_examples():
    assert not is_kernel_perfect(Digraph(range(3), [(0, 1), (1, 2), (2, 0)]))
    assert is_kernel_perfect(Digraph(range(4)))
    with pytest.raises(SizeLimitError):
        is_kernel_perfect(Digraph(range(11)))


# -- Alon-Tarsi counting ------------------------------------------------------


def test_alon_tarsi_examples():
    acyclic = Digraph(range(4), [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert alon_tarsi_diff(acyclic) == type(alon_tarsi_diff(acyclic))(1, 1, 0)
    tri = Digraph(range(3), [(0, 1), (1, 2), (2, 0)])
    c = alon_tarsi_diff(tri)
    assert (c.even, c.odd, c.diff) == (1, 1, 0)
    c4 = Digraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    c = alon_tarsi_diff(c4)
    assert (c.even, c.odd, c.diff) == (2, 0, 2)


def test_alon_tarsi_brute_force_agreement():
    import random

    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 5)
        arcs = []
        for u, v in itertools.combinations(range(n), 2):
            r = rng.random()
            if r < 0.3:
                arcs.append((u, v))
            elif r < 0.5:
                arcs.append((v, u))
            elif r < 0.6:
                arcs += [(u, v), (v, u)]
        d = Digraph(range(n), arcs)
        even = odd = 0
        for pick in range(1 << len(arcs)):
            bal = [0] * n
            size = 0
            for i, (t, h) in enumerate(d.arcs):
                if pick >> i & 1:
                    bal[t] += 1
                    bal[h] -= 1
                    size += 1
            if all(b == 0 for b in bal):
                if size % 2:
                    odd += 1
                else:
                    even += 1
        c = alon_tarsi_diff(d)
        assert (c.even, c.odd) == (even, odd)
        assert c.even >= 1


def test_alon_tarsi_arc_cap():
    arcs = [(u, v) for u, v in itertools.combinations(range(8), 2)]  # 28 arcs
    with pytest.raises(SizeLimitError):
        alon_tarsi_diff(Digraph(range(8), arcs))


# -- f-AT ----------------------------------------------------------------------


def test_is_f_at_examples(c4, c5):
    dec = is_f_AT(c4, [2] * 4)
    assert dec and dec.counts.diff != 0
    assert all(dec.witness.out_degree(v) <= 1 for v in range(4))
    assert not is_f_AT(c5, [2] * 5)
    p4 = make_named("path", [4])
    assert not is_f_AT(p4, p4.degrees)  # Gallai tree under its own degrees
    with pytest.raises(SizeLimitError):
        is_f_AT(make_named("complete", [6]), [6] * 6)


# -- f-KP ----------------------------------------------------------------------


def test_is_f_kp_examples(k4e):
    dec = is_f_KP(k4e, k4e.degrees)
    assert dec and dec.witness.doubled_pairs() == {(0, 1)}
    assert not is_f_KP(k4e, k4e.degrees, allow_supergraph=False)
    assert is_f_KP(Graph(1), {0: 1})
    assert not is_f_KP(make_named("cycle", [5]), [2] * 5)
    with pytest.raises(SizeLimitError):
        is_f_KP(make_named("cycle", [6]), [2] * 6)


def test_is_f_kp_witness_meets_bounds(k4e):
    dec = is_f_KP(k4e, k4e.degrees)
    w = dec.witness
    assert is_kernel_perfect(w)
    assert all(w.out_degree(v) + 1 <= k4e.degrees[v] for v in range(4))
    assert k4e.edges <= w.underlying_edges()


# -- witness extension ---------------------------------------------------------


def test_extend_d0_kp_pendant(k4e):
    g = Graph(5, list(k4e.edges) + [(0, 4)])
    w = is_f_KP(k4e, k4e.degrees).witness
    ext = extend_d0_kp(g, range(4), w)
    assert ext.vertex_set == frozenset(range(5))
    assert is_kernel_perfect(ext)
    assert ext.out_degree(4) == 0 and (0, 4) in ext.arcs
    assert all(ext.out_degree(v) < g.degrees[v] for v in range(5))


def test_extend_d0_kp_errors(k4e):
    w = is_f_KP(k4e, k4e.degrees).witness
    with pytest.raises(ValueError, match="nothing to extend"):
        extend_d0_kp(k4e, range(4), w)
    disconnected = Graph(6, list(k4e.edges) + [(4, 5)])
    with pytest.raises(ValueError, match="connected"):
        extend_d0_kp(disconnected, range(4), w)
