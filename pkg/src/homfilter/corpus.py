"""Seeded instance generators.

All randomness goes through :class:`random.Random` (Mersenne Twister,
MT19937) seeded explicitly, so a seed determines every generated corpus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from .graph import (
    ColoredGraph,
    cycle_graph,
    elementary_wall,
    is_connected,
    is_surjectively_colored,
    make_colorful,
    s_edge_colors,
)


def rng_for(seed: int, *salt: int | str) -> random.Random:
    """Independent MT19937 stream for ``(seed, *salt)``."""
    return random.Random(repr((seed,) + salt))


def random_connected_colorful(rng: random.Random, n: int, max_degree: int = 4, p: float = 0.4) -> ColoredGraph:
    """Random connected colorful graph: a random spanning tree plus extra edges, degrees capped."""
    if n < 2:
        raise ValueError("need at least two vertices")
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        v = order[i]
        choices = [u for u in order[:i] if deg[u] < max_degree]
        u = rng.choice(choices)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    for u, v in combinations(range(n), 2):
        if (u, v) in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        if rng.random() < p:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    S = ColoredGraph.colorful(n, sorted(edges))
    assert is_connected(S) and S.max_degree <= max_degree
    return S


def base_corpus(seed: int = 0, random_count: int = 100, max_n: int = 8) -> list[tuple[str, ColoredGraph]]:
    """Cycles ``C3..C8``, elementary walls ``r = 2, 3`` and random connected graphs with ``Δ <= 4``."""
    out = [(f"C{n}", make_colorful(cycle_graph(n))) for n in range(3, 9)]
    out += [(f"wall{r}", elementary_wall(r)) for r in (2, 3)]
    for i in range(random_count):
        rng = rng_for(seed, "base", i)
        n = rng.randint(2, max_n)
        out.append((f"rand{i}", random_connected_colorful(rng, n, 4, rng.uniform(0.1, 0.6))))
    return out


def random_colored_graph(
    rng: random.Random,
    n: int,
    colors: Sequence[int],
    p: float = 0.5,
    allowed: set[tuple[int, int]] | None = None,
    color_set: Sequence[int] | None = None,
) -> ColoredGraph:
    """Loopless graph with uniformly random vertex colors from ``colors``.

    With ``allowed`` only pairs whose (sorted) colors lie in it may be joined.
    """
    cols = [rng.choice(list(colors)) for _ in range(n)]
    edges = []
    for u, v in combinations(range(n), 2):
        pair = (min(cols[u], cols[v]), max(cols[u], cols[v]))
        if allowed is not None and pair not in allowed:
            continue
        if rng.random() < p:
            edges.append((u, v))
    cs = tuple(color_set) if color_set is not None else tuple(sorted(set(colors)))
    return ColoredGraph.from_edges(n, edges, colors=cols, color_set=cs)


def random_uncolored_graph(rng: random.Random, n: int, p: float = 0.5) -> ColoredGraph:
    return random_colored_graph(rng, n, [0], p)


def s_colored_graphs(S: ColoredGraph, max_vertices: int | None = None) -> Iterator[ColoredGraph]:
    """Every ``S``-colored graph on ``1..max_vertices`` vertices (labeled, colors sorted).

    Vertex colors are non-decreasing along vertex ids; edges run only between
    colors adjacent in ``S``.
    """
    if max_vertices is None:
        max_vertices = S.n
    pairs = s_edge_colors(S)
    for k in range(1, max_vertices + 1):
        for cols in combinations_with_replacement(S.color_set, k):
            cand = [(u, v) for u, v in combinations(range(k), 2) if (min(cols[u], cols[v]), max(cols[u], cols[v])) in pairs]
            for mask in product((0, 1), repeat=len(cand)):
                edges = [e for e, b in zip(cand, mask) if b]
                yield ColoredGraph(S.color_set, cols, frozenset(edges))


def non_surjective_family(S: ColoredGraph, max_vertices: int | None = None) -> Iterator[ColoredGraph]:
    """``S``-colored graphs that miss at least one edge-color class of ``S``."""
    for H in s_colored_graphs(S, max_vertices):
        if not is_surjectively_colored(H, S):
            yield H


def small_colorful_bases() -> list[tuple[str, ColoredGraph]]:
    """Hand-picked connected colorful graphs on at most six vertices."""
    c = ColoredGraph.colorful
    return [
        ("K2", c(2, [(0, 1)])),
        ("P3", c(3, [(0, 1), (1, 2)])),
        ("K3", c(3, [(0, 1), (1, 2), (0, 2)])),
        ("P4", c(4, [(0, 1), (1, 2), (2, 3)])),
        ("star3", c(4, [(0, 1), (0, 2), (0, 3)])),
        ("C4", c(4, [(0, 1), (1, 2), (2, 3), (0, 3)])),
        ("paw", c(4, [(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("diamond", c(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])),
        ("K4", c(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
        ("C5", c(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])),
        ("P5", c(5, [(0, 1), (1, 2), (2, 3), (3, 4)])),
        ("C6", c(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])),
        ("P6", c(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])),
    ]


# ---------------------------------------------------------------------------
# Reduction instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionInstance:
    """One end-to-end input: recover ``hom(S, G)`` from ``kind(H, .)``."""

    case: str
    S: ColoredGraph
    T: ColoredGraph
    s: int
    kind: str
    H: ColoredGraph
    G: ColoredGraph


def _random_colorful_pattern(rng: random.Random, n: int, max_degree: int = 3) -> ColoredGraph:
    if n == 1:
        return ColoredGraph.colorful(1, [])
    return random_connected_colorful(rng, n, max_degree, rng.uniform(0.0, 0.5))


def _host_for(rng: random.Random, S: ColoredGraph, max_host: int) -> ColoredGraph:
    n = rng.randint(max(2, S.n), max_host)
    return random_colored_graph(rng, n, S.color_set, rng.uniform(0.3, 0.8), color_set=S.color_set)


def _spanning_subgraph(rng: random.Random, T: ColoredGraph, keep: float) -> ColoredGraph:
    """Random ``S <= T``: drop edges, then keep only vertices that still touch an edge."""
    edges = [e for e in T.edge_list if rng.random() < keep] or [rng.choice(T.edge_list)]
    used = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(used)}
    cols = tuple(T.vertex_colors[v] for v in used)
    return ColoredGraph(cols, cols, frozenset((pos[u], pos[v]) for u, v in edges))


def reduction_instances(case: str, count: int, seed: int = 0, max_host: int = 12) -> list[ReductionInstance]:
    """Seeded end-to-end instances for the three reduction cases.

    * ``a``: ``S = T`` random colorful (sometimes disconnected), ``p = hom(S°, .)``.
    * ``b``: ``H`` a matching on ``|E(S)|`` or ``|E(S)| + 1`` edges, ``T`` from the
      matching-quotient embedding, ``p = sub(H, .)``.
    * ``c``: ``T`` colorful with ``T° = H``, ``S <= T``, ``p = ind(H, .)``.
    """
    from .expansion import matching_quotient_embed
    from .graph import disjoint_union, matching_graph, strip_colors

    out = []
    for i in range(count):
        rng = rng_for(seed, "reduce", case, i)
        if case == "a":
            n = rng.randint(2, 5)
            S = _random_colorful_pattern(rng, n)
            if rng.random() < 0.25 and S.n < 6:
                extra = _random_colorful_pattern(rng, rng.randint(1, min(2, 6 - S.n)))
                S = make_colorful(disjoint_union(S, extra))
            T, s, kind, H = S, S.n, "hom", strip_colors(S)
        elif case == "b":
            k = rng.randint(1, 3)
            T0 = _random_colorful_pattern(rng, rng.randint(2, k + 1))
            S = _spanning_subgraph(rng, T0, 1.0)
            while S.m > 3:
                S = _spanning_subgraph(rng, T0, 0.6)
            extra = rng.randint(0, 1) if S.m < 3 else 0
            H = matching_graph(S.m + extra)
            M = [(2 * j, 2 * j + 1) for j in range(S.m + extra)]
            T, _ = matching_quotient_embed(S, H, M)
            s, kind = H.n, "sub"
        elif case == "c":
            n = rng.randint(2, 5)
            T = _random_colorful_pattern(rng, n)
            S = _spanning_subgraph(rng, T, rng.uniform(0.5, 1.0))
            s, kind, H = T.n, "ind", strip_colors(T)
        else:
            raise ValueError(f"unknown case {case!r}")
        G = _host_for(rng, S, max_host)
        out.append(ReductionInstance(case, S, T, s, kind, H, G))
    return out
