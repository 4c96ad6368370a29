import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sqfree.rauzy import (ArcMissing, GraphFormatError, GraphMeta, LabeledGraph, NotPsiReducible,
                          build_full_rauzy, build_psi_graph, deserialize_graph, psi,
                          psi_qualifies, psi_step, serialize_graph)
from sqfree.search import oracle_psi_image
from sqfree.words import has_square_suffix, parse_word, render, square_free_words


def w(s):
    return bytes(parse_word(s))


def test_full_rauzy_ternary_p3():
    g = build_full_rauzy(3, 3)
    assert (g.n_vertices, g.n_arcs) == (12, 18)
    deg = {render(v): int(d) for v, d in zip(g.words, g.out_degree())}
    for v, d in deg.items():
        assert d == (1 if v[0] == v[2] else 2)


def test_full_rauzy_binary_p3():
    g = build_full_rauzy(2, 3)
    assert sorted(render(v) for v in g.words) == ["010", "101"]
    assert g.n_arcs == 0


def test_full_rauzy_p2():
    g = build_full_rauzy(3, 2)
    assert g.n_vertices == 3
    assert g.word_arcs() == {(bytes([a]), bytes([b]), b) for a in range(3) for b in range(3) if a != b}


def test_full_rauzy_budget():
    from sqfree.rauzy import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        build_full_rauzy(3, 6, max_vertices=10)


def test_psi_example():
    assert render(psi(w("0210120"), 5)) == "10120"
    assert render(psi(w("10120"), 5)) == "10120"


def test_psi_identity_at_p3():
    for v in square_free_words(3, 3):
        assert psi(v, 3) == v


def test_psi_not_reducible():
    with pytest.raises(NotPsiReducible):
        psi(w("01"), 5)


def test_psi_step():
    assert render(psi_step(w("012"), 0, 3)) == "120"
    with pytest.raises(ArcMissing):
        psi_step(w("010"), 1, 3)
    # frozen from the full graph: every length-7 preimage of 10120 extended by 2
    assert render(psi_step(w("10120"), 2, 5)) == "01202"


@pytest.mark.parametrize("k, p", [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 3), (4, 4), (4, 5), (2, 3)])
def test_exhaustive_matches_psi_image(k, p):
    g, meta = build_psi_graph(k, p)
    V, A = oracle_psi_image(k, p)
    assert set(g.words) == V
    assert g.word_arcs() == A
    assert meta.mode == "exhaustive" and meta.compressed


def test_psi_graph_p3_is_full_graph():
    g, _ = build_psi_graph(3, 3)
    assert g == build_full_rauzy(3, 3)


def test_binary_p3_psi_graph():
    g, _ = build_psi_graph(2, 3)
    assert (g.n_vertices, g.n_arcs) == (2, 0)


@pytest.mark.parametrize("k, p", [(3, 5), (3, 8), (4, 4)])
def test_determinism_and_out_degree(k, p):
    g, _ = build_psi_graph(k, p)
    assert (g.out_degree() <= k - 1).all()
    for v, word in enumerate(g.words):
        assert g.succ[word[-1], v] == -1


@pytest.mark.parametrize("k, p", [(3, 5), (3, 7), (3, 10), (4, 4), (4, 5)])
def test_reachable_subset_of_exhaustive(k, p):
    ex, _ = build_psi_graph(k, p, "exhaustive")
    re_, meta = build_psi_graph(k, p, "reachable")
    assert meta.mode == "reachable"
    assert set(re_.words) <= set(ex.words)
    assert re_.word_arcs() <= ex.word_arcs()


@pytest.mark.parametrize("k, p", [(3, 5), (3, 8)])
def test_vertex_membership_criterion(k, p):
    # a vertex qualifies itself and no proper suffix qualifies
    g, _ = build_psi_graph(k, p)
    for v in g.words:
        assert psi_qualifies(v, p)
        assert not any(psi_qualifies(v[j:], p) for j in range(1, len(v)))


@pytest.mark.parametrize("k, p", [(3, 3), (3, 4), (3, 5)])
def test_psi_properties_all_words(k, p):
    for v in square_free_words(k, 2 * p - 3):
        v = bytes(v)
        image = psi(v, p)
        assert 1 <= len(image) and v.endswith(image)
        assert psi(image, p) == image


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 9), st.data())
def test_psi_idempotent_random(p, data):
    words = list(square_free_words(3, 2 * p - 3))
    v = bytes(data.draw(st.sampled_from(words)))
    assert psi(psi(v, p), p) == psi(v, p)


def test_psi_step_agrees_with_full_arcs():
    p = 6
    full = build_full_rauzy(3, p)
    for s, t, a in full.arcs():
        assert psi_step(psi(full.words[s], p), a, p) == psi(full.words[t], p)
    for s, word in enumerate(full.words):
        for a in range(3):
            if full.succ[a, s] == -1:
                assert has_square_suffix(word + bytes([a]))


def test_serialize_round_trip():
    g, meta = build_psi_graph(3, 3)
    data = serialize_graph(g, meta)
    lines = data.decode().split("\n")
    assert lines[0] == "RAUZY v1 k=3 p=3 mode=exhaustive |V|=12 |A|=18"
    assert data.endswith(b"\n") and not any(l != l.rstrip() for l in lines)
    g2, meta2 = deserialize_graph(data)
    assert g2.words == g.words and np.array_equal(g2.succ, g.succ) and meta2 == meta
    assert serialize_graph(g2, meta2) == data


def test_serialization_is_reproducible():
    a = serialize_graph(*build_psi_graph(3, 7))
    b = serialize_graph(*build_psi_graph(3, 7))
    assert a == b


def test_empty_graph_round_trip():
    g = LabeledGraph(3, [], np.zeros((3, 0), dtype=np.int64))
    meta = GraphMeta(3, 4, "reachable")
    g2, meta2 = deserialize_graph(serialize_graph(g, meta))
    assert g2.n_vertices == 0 and meta2 == meta


def test_header_mismatch():
    g, meta = build_psi_graph(3, 3)
    text = serialize_graph(g, meta).decode().replace("|V|=12", "|V|=13")
    with pytest.raises(GraphFormatError):
        deserialize_graph(text)


@pytest.mark.parametrize("mutate, line", [
    (lambda ls: ls.__setitem__(2, "01x"), 3),
    (lambda ls: ls.__setitem__(14, "0 99 1"), 15),
    (lambda ls: ls.__setitem__(0, "RAUZY v2"), 1),
])
def test_malformed_reports_line(mutate, line):
    g, meta = build_psi_graph(3, 3)
    lines = serialize_graph(g, meta).decode().split("\n")
    mutate(lines)
    with pytest.raises(GraphFormatError) as exc:
        deserialize_graph("\n".join(lines))
    assert exc.value.line == line
