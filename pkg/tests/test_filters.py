from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from homfilter.cfi import cfi_filter
from homfilter.corpus import non_surjective_family, random_colored_graph
from homfilter.counting import hom_count, make_oracle
from homfilter.filters import (
    ColorCoarsening,
    _interpolation_weights,
    apply_filters,
    cardinality_filter,
    inclusion_exclusion_filter,
    interpolation_weights_direct,
    looped_template,
    vertex_count_filter,
)
from homfilter.graph import ColoredGraph, s_edge_colors, strip_colors
from homfilter.quantum import collect, hom_into, tensor
from homfilter.verify import all_colored_graphs, coarsenings

TRI = ColoredGraph.colorful(3, [(0, 1), (1, 2), (0, 2)])


def test_looped_template_single_part():
    N = looped_template(ColorCoarsening(((0,),), (1,)), [2])
    assert N.n == 2 and N.edges == {(0, 0), (1, 1), (0, 1)}


def test_looped_template_hom_is_monomial():
    eta = ColorCoarsening(((0,), (1,)), (0, 0))
    N = looped_template(eta, [2, 3])
    H = ColoredGraph.from_edges(3, [(0, 2), (1, 2)], colors=[0, 0, 1], color_set=[0, 1])
    assert hom_count(H, N) == 12
    for H in all_colored_graphs(3, (0, 1)):
        n0, n1 = eta.part_counts(H)
        assert hom_count(H, N) == 2**n0 * 3**n1


def test_coarsening_validation():
    with pytest.raises(ValueError):
        ColorCoarsening(((0, 1), (1,)), (1, 1))
    with pytest.raises(ValueError):
        ColorCoarsening(((0,),), (1, 2))
    with pytest.raises(ValueError):
        cardinality_filter(ColorCoarsening(((0,),), (5,)), 4)


def test_vertex_count_filter():
    N = vertex_count_filter(2, 4)
    assert len(N) == 5
    for H in all_colored_graphs(4, (0,)):
        assert hom_into(H, N) == int(H.n == 2)


def test_cardinality_filter_two_colors():
    s = 4
    for eta in coarsenings((0, 1), s, 2):
        N = cardinality_filter(eta, s)
        assert len(N) <= (s + 1) ** eta.r
        for H in all_colored_graphs(s, (0, 1)):
            assert hom_into(H, N) == int(eta.is_coarsened(H))


@pytest.mark.parametrize("targets,s", [((2,), 4), ((1, 2), 3), ((0, 3), 4), ((1, 1, 1), 3)])
def test_kronecker_weights_match_direct_solve(targets, s):
    assert _interpolation_weights(targets, s) == interpolation_weights_direct(targets, s)


def test_ie_filter_k2():
    K2 = ColoredGraph.colorful(2, [(0, 1)])
    I = inclusion_exclusion_filter(K2)
    assert len(I) == 2 and sorted(I.coefficients) == [-1, 1]
    assert hom_into(K2, I) == 1


def test_ie_filter_triangle():
    I = inclusion_exclusion_filter(TRI)
    assert len(I) == 8 and hom_into(TRI, I) == 1
    for H in non_surjective_family(TRI, 4):
        assert hom_into(H, I) == 0


def test_ie_cap():
    with pytest.raises(ValueError):
        inclusion_exclusion_filter(TRI, cap=2)


def test_apply_filters_no_filters():
    p = make_oracle("hom", strip_colors(TRI))
    G = strip_colors(random_colored_graph(random.Random(0), 6, (0, 1, 2), 0.6))
    assert apply_filters(p, [], G) == hom_count(strip_colors(TRI), G)
    assert p.calls == 1


def test_apply_filters_call_counts():
    rng = random.Random(1)
    G = random_colored_graph(rng, 6, (0, 1, 2), 0.6, allowed=s_edge_colors(TRI), color_set=(0, 1, 2))
    p = make_oracle("hom", strip_colors(TRI))
    X = cfi_filter(TRI)
    apply_filters(p, [X], G)
    assert p.calls == 2
    assert p.max_size <= G.n * 2 ** (TRI.max_degree - 1)
    s = 4
    eta = ColorCoarsening(((0, 1), (2,)), (2, 1))
    N = cardinality_filter(eta, s)
    p.reset()
    apply_filters(p, [X, N], G)
    assert p.calls == 2 * (s + 1) ** 2


def test_apply_filters_matches_materialized():
    from homfilter.quantum import QuantumGraph, evaluate_linear, tensor_quantum

    rng = random.Random(2)
    X = cfi_filter(TRI)
    N = cardinality_filter(ColorCoarsening(((0, 1, 2),), (3,)), 3)
    for _ in range(5):
        G = random_colored_graph(rng, rng.randint(3, 6), (0, 1, 2), 0.6, color_set=(0, 1, 2))
        p = make_oracle("hom", strip_colors(TRI))
        full = tensor_quantum(tensor_quantum(QuantumGraph.single(G), X), N)
        assert apply_filters(p, [X, N], G) == evaluate_linear(p, full)


def test_apply_filters_color_mismatch():
    p = make_oracle("hom", strip_colors(TRI))
    with pytest.raises(ValueError):
        apply_filters(p, [cfi_filter(TRI)], ColoredGraph.from_edges(2, [(0, 1)]))
