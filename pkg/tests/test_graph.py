from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homfilter.corpus import random_uncolored_graph
from homfilter.counting import hom_count
from homfilter.graph import (
    ColoredGraph,
    apply_coloring,
    automorphism_count,
    canonical_form,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    edge_color_classes,
    elementary_wall,
    is_connected,
    is_isomorphic,
    is_surjectively_colored,
    path_graph,
    relabel,
    restrict_to_colors,
    split_off_edge,
    strip_colors,
    subdivide_edge,
    verify_isomorphism,
)


def test_strip_colors(triangle):
    K3 = strip_colors(triangle)
    assert K3.color_set == (0,) and K3.edges == complete_graph(3).edges
    assert strip_colors(K3) is K3
    W = elementary_wall(2)
    assert (strip_colors(W).n, strip_colors(W).m) == (W.n, W.m)


def test_apply_coloring():
    K2 = complete_graph(2)
    assert apply_coloring(K2, [0, 0]).color_set == (0,)
    assert apply_coloring(K2, {0: 1, 1: 2}).is_colorful
    K3c = apply_coloring(complete_graph(3), [1, 1, 2])
    assert K3c.class_sizes == {1: 2, 2: 1}
    with pytest.raises(ValueError):
        apply_coloring(K2, {0: 1})


def test_isomorphism_examples(triangle):
    assert is_isomorphic(triangle, triangle) == {0: 0, 1: 1, 2: 2}
    assert is_isomorphic(complete_graph(3), path_graph(3)) is None
    # a relabeled copy is found and the returned map checks out
    perm = [2, 0, 1]
    C5 = cycle_graph(5)
    D = relabel(C5, [3, 1, 4, 0, 2])
    f = is_isomorphic(C5, D)
    assert f is not None and verify_isomorphism(C5, D, f)
    assert relabel(triangle, perm).vertex_colors == (1, 2, 0)


def test_isomorphism_respects_colors():
    a = ColoredGraph.from_edges(2, [(0, 1)], colors=[0, 1])
    b = ColoredGraph.from_edges(2, [(0, 1)], colors=[0, 0], color_set=[0, 1])
    assert is_isomorphic(a, b) is None


def test_automorphisms(triangle):
    assert automorphism_count(complete_graph(3)) == 6
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(triangle) == 1
    assert automorphism_count(cycle_graph(6)) == 12
    with pytest.raises(ValueError):
        automorphism_count(complete_graph(11))


@pytest.mark.parametrize("r", range(1, 9))
def test_wall_degree(r):
    W = elementary_wall(r)
    assert W.max_degree <= 3 and is_connected(W) and W.is_colorful


def test_wall_shapes():
    assert elementary_wall(1).edge_list == [(0, 1)]
    W = elementary_wall(2)
    assert W.n == 4 and W.m == 3  # a path
    assert elementary_wall(3).m == 9


def test_edge_color_classes(triangle):
    classes = edge_color_classes(triangle, triangle)
    assert all(len(v) == 1 for v in classes.values())
    empty = ColoredGraph(triangle.color_set, (0, 1, 2), frozenset())
    assert all(not v for v in edge_color_classes(empty, triangle).values())
    two = disjoint_union(triangle, triangle)
    assert all(len(v) == 2 for v in edge_color_classes(two, triangle).values())


def test_surjective_coloring(triangle):
    assert is_surjectively_colored(triangle, triangle)
    minus = ColoredGraph(triangle.color_set, triangle.vertex_colors, triangle.edges - {(0, 2)})
    assert not is_surjectively_colored(minus, triangle)
    H = triangle
    for k in range(1, 4):
        H = split_off_edge(H, H.edge_list[0])
        assert is_surjectively_colored(H, triangle) and H.n == 3 + 2 * k


def test_components():
    G = disjoint_union(complete_graph(2), complete_graph(3))
    comps = connected_components(G)
    assert [c.n for c in comps] == [2, 3]
    assert connected_components(cycle_graph(4))[0].edges == cycle_graph(4).edges


def test_hom_multiplies_over_components():
    rng = random.Random(5)
    S = ColoredGraph.colorful(5, [(0, 1), (2, 3), (3, 4)])
    for _ in range(20):
        from homfilter.corpus import random_colored_graph

        G = random_colored_graph(rng, 8, S.color_set, 0.6, color_set=S.color_set)
        prod = 1
        for Si in connected_components(S):
            prod *= hom_count(Si, restrict_to_colors(G, Si.color_set))
        assert prod == hom_count(S, G)


def test_subdivide(triangle):
    G = subdivide_edge(triangle, (0, 1))
    assert G.n == 4 and G.is_colorful and G.m == 4


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6), st.permutations(range(7)))
def test_canonical_form_invariant(n, seed, perm):
    G = random_uncolored_graph(random.Random(seed), n, 0.5)
    p = [x for x in perm if x < n]
    H = relabel(G, p)
    assert canonical_form(G)[0] == canonical_form(H)[0]
    f = is_isomorphic(G, H)
    assert f is not None and verify_isomorphism(G, H, f)
    g = is_isomorphic(H, G)
    assert g is not None and verify_isomorphism(H, G, g)


def test_canonical_form_separates():
    assert canonical_form(path_graph(4))[0] != canonical_form(ColoredGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))[0]


def test_validation():
    with pytest.raises(ValueError):
        ColoredGraph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        ColoredGraph.from_edges(2, [(0, 1)], colors=[0, 5], color_set=[0, 1])
