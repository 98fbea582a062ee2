from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homfilter.corpus import random_colored_graph
from homfilter.counting import hom_count, make_oracle
from homfilter.graph import ColoredGraph, complete_graph, is_isomorphic, relabel, s_edge_colors
from homfilter.quantum import QuantumGraph, collect, evaluate_linear, hom_into, tensor, tensor_quantum


def test_collect_merges_and_cancels():
    K3 = complete_graph(3)
    K3r = relabel(K3, [2, 0, 1])
    assert collect([(K3, F(1, 2)), (K3r, F(1, 2))]).coefficients == [1]
    assert len(collect([(K3, 1), (K3, -1)])) == 0
    Q = collect([(complete_graph(4), F(1, 24)), (K3, F(-1, 6))])
    assert Q.coefficients == [F(-1, 6), F(1, 24)] and len(Q) == 2


def test_collect_rejects_mixed_color_sets(triangle):
    with pytest.raises(ValueError):
        collect([(triangle, 1), (complete_graph(3), 1)])


def test_collect_order_independent():
    rng = random.Random(3)
    terms = [(random_colored_graph(rng, rng.randint(1, 5), [0], 0.5), F(rng.randint(-3, 3), rng.randint(1, 4))) for _ in range(25)]
    a = collect(terms)
    b = collect(list(reversed(terms)))
    assert [(g.edges, g.vertex_colors, c) for g, c in a.terms] == [(g.edges, g.vertex_colors, c) for g, c in b.terms]
    assert collect(a.terms) == a


def test_tensor_unit(triangle):
    rng = random.Random(0)
    for _ in range(10):
        G = random_colored_graph(rng, 6, triangle.color_set, 0.6, allowed=s_edge_colors(triangle), color_set=triangle.color_set)
        T = tensor(G, triangle)
        assert is_isomorphic(T, G) is not None


def test_tensor_deletes_classes(triangle):
    S2 = ColoredGraph(triangle.color_set, triangle.vertex_colors, triangle.edges - {(0, 2)})
    rng = random.Random(1)
    G = random_colored_graph(rng, 7, triangle.color_set, 0.7, allowed=s_edge_colors(triangle), color_set=triangle.color_set)
    T = tensor(G, S2)
    expect = ColoredGraph(G.color_set, G.vertex_colors, frozenset(e for e in G.edges if {G.vertex_colors[e[0]], G.vertex_colors[e[1]]} != {0, 2}))
    assert is_isomorphic(T, expect) is not None


def test_tensor_class_sizes():
    rng = random.Random(2)
    for _ in range(10):
        G = random_colored_graph(rng, 5, [0, 1], 0.5, color_set=[0, 1])
        X = random_colored_graph(rng, 4, [0, 1], 0.5, color_set=[0, 1])
        T = tensor(G, X)
        for c in (0, 1):
            assert T.class_sizes.get(c, 0) == G.class_sizes.get(c, 0) * X.class_sizes.get(c, 0)


def test_tensor_color_mismatch(triangle):
    with pytest.raises(ValueError):
        tensor(triangle, complete_graph(3))


def test_evaluate_linear_examples():
    p = make_oracle("hom", complete_graph(2))
    assert evaluate_linear(p, QuantumGraph(())) == 0
    assert evaluate_linear(p, QuantumGraph.single(complete_graph(3))) == 6
    Q = collect([(complete_graph(4), F(1, 24)), (complete_graph(3), F(-1, 6))])
    p.reset()
    assert evaluate_linear(p, Q) == F(-1, 2)
    assert p.calls == 2


def _random_quantum(rng, k, colors):
    return collect((random_colored_graph(rng, rng.randint(1, 3), colors, 0.6, color_set=colors), F(rng.randint(1, 5), rng.randint(1, 3))) for _ in range(k))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_fact_multiplicative(seed):
    rng = random.Random(seed)
    colors = (0, 1)
    Q1, Q2 = _random_quantum(rng, 2, colors), _random_quantum(rng, 3, colors)
    Fg = random_colored_graph(rng, rng.randint(1, 4), colors, 0.6, color_set=colors)
    assert hom_into(Fg, tensor_quantum(Q1, Q2)) == hom_into(Fg, Q1) * hom_into(Fg, Q2)


def test_tensor_commutative_associative():
    rng = random.Random(9)
    colors = (0, 1)
    for _ in range(10):
        a, b, c = (random_colored_graph(rng, rng.randint(1, 3), colors, 0.6, color_set=colors) for _ in range(3))
        assert is_isomorphic(tensor(a, b), tensor(b, a)) is not None
        assert is_isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) is not None


def test_quantum_invariants(triangle):
    with pytest.raises(ValueError):
        QuantumGraph(((triangle, F(0)),))
