import json

import pytest

from kernelpaint import (
    Certificate,
    Graph,
    HypothesisNotMetError,
    PaintabilitySolver,
    check_mic_strength,
    cut_lemma_check,
    enumerate_graphs,
    extract_reducible,
    is_gallai_tree,
    is_kernel_perfect,
    is_oc_reducible,
    make_named,
)
from kernelpaint.errors import SizeLimitError
from kernelpaint.structure import is_gallai_forest


# -- extraction ----------------------------------------------------------------


def test_extract_single_vertex():
    cert = extract_reducible(Graph(1), {0: 1}, [0])
    assert cert.h_vertices == (0,) and cert.digraph.arcs == ()
    assert cert.f_h == {0: 1}


def test_extract_c4(c4):
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    assert cert.h_vertices == (0, 1, 2, 3)
    assert all(cert.digraph.out_degree(v) == 1 for v in range(4))
    assert is_kernel_perfect(cert.digraph)


def test_extract_c5_hypothesis_not_met(c5):
    with pytest.raises(HypothesisNotMetError):
        extract_reducible(c5, c5.degrees)


def test_extract_validates_inputs(c4):
    with pytest.raises(ValueError, match="independent"):
        extract_reducible(c4, c4.degrees, [0, 1])
    with pytest.raises(ValueError, match="outside"):
        extract_reducible(c4, [5, 2, 2, 2], [0, 2])


def test_extract_defaults_to_mic_witness():
    g = make_named("K4_minus_e")
    cert = extract_reducible(g, g.degrees)
    assert set(cert.h_vertices) <= set(range(4))
    assert all(
        cert.f_h[v] >= cert.digraph.out_degree(v) + 1 for v in cert.h_vertices
    )


def test_extract_on_c4_with_pendant():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])
    cert = extract_reducible(g, g.degrees)
    assert cert.h_vertices
    solver = PaintabilitySolver(g)
    assert solver.wins(cert.h_vertices, cert.f_h)


def test_certificates_confirmed_by_game_solver():
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected_only=True):
            if is_gallai_tree(g):
                continue
            cert = extract_reducible(g, g.degrees)
            solver = PaintabilitySolver(g)
            assert solver.wins(cert.h_vertices, cert.f_h), g


def test_certificate_json_round_trip(c4):
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    back = Certificate.loads(cert.dumps())
    assert back == cert
    obj = json.loads(cert.dumps())
    assert set(obj) == {"vertices", "arcs", "f_h"}


# -- OC-reducibility -----------------------------------------------------------


def test_oc_examples(c4, c5, k4):
    assert is_oc_reducible(c5) is None
    assert is_oc_reducible(k4) is None
    got = is_oc_reducible(c4)
    assert got is not None and got[0] == (0, 1, 2, 3)
    with pytest.raises(SizeLimitError):
        is_oc_reducible(Graph(8))


def test_oc_pendant_graphs_are_irreducible():
    # a pendant vertex forces f_H(v) <= 0 on every proper candidate
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert is_oc_reducible(g) is None


def test_mic_strength_examples(c4, c5, k4):
    rec = check_mic_strength(c5)
    assert rec.irreducible and rec.mic_value == rec.bound == 4 and rec.holds
    rec = check_mic_strength(k4)
    assert rec.irreducible and rec.mic_value == rec.bound == 3 and rec.holds
    rec = check_mic_strength(c4)
    assert not rec.irreducible and rec.holds


def test_oc_irreducible_low_part_is_gallai_forest():
    # the min-degree part of an OC-irreducible graph is a Gallai forest
    for n in range(2, 8):
        for g in enumerate_graphs(n, connected_only=True):
            if is_oc_reducible(g) is not None:
                continue
            delta = min(g.degrees)
            low = [v for v in range(g.n) if g.degrees[v] == delta]
            assert is_gallai_forest(g.induced(low)), g


# -- cut lemma -----------------------------------------------------------------


def test_cut_lemma_examples(c4, k4):
    two_tri = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    rec = cut_lemma_check(two_tri, [3] * 6, [0, 1, 2])
    assert rec.holds and rec.rest_choosable and rec.part_choosable
    assert rec.whole_choosable
    rec = cut_lemma_check(c4, [2] * 4, [0, 1])
    assert rec.holds
    rec = cut_lemma_check(k4, [3] * 4, [0, 1, 2])
    assert rec.holds and not rec.part_choosable  # vacuous: antecedent fails
    with pytest.raises(SizeLimitError):
        cut_lemma_check(Graph(7), [1] * 7, [0])


def test_cut_lemma_h_equals_g(c4):
    rec = cut_lemma_check(c4, [2] * 4, range(4))
    assert rec.holds
