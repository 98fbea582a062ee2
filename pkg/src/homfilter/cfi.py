"""CFI constraint graphs over a colorful base graph and the filter built from them.

For a colorful ``S`` and a charge ``c: E(S) -> {0, 1}`` the graph ``Gamma(S, c)``
has, for every vertex ``v`` of ``S``, one vertex per even 0/1 assignment to the
edges incident with ``v``. Assignments at ``u`` and ``v`` are adjacent iff
their bits on ``uv`` differ exactly by ``c(uv)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from .graph import (
    ColoredGraph,
    Edge,
    _norm_edge,
    is_colorful_subgraph,
    is_connected,
    isolated_vertices,
)
from .quantum import QuantumGraph, tensor

MAX_DEGREE = 16

Bits = tuple[int, ...]


class ChargeFunction:
    """A 0/1 value on every edge of a base graph."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Edge, int]):
        self._values = {_norm_edge(*e): int(b) & 1 for e, b in values.items()}

    @classmethod
    def indicator(cls, S: ColoredGraph, edges: Iterable[Edge] = ()) -> "ChargeFunction":
        chosen = {_norm_edge(*e) for e in edges}
        bad = chosen - set(S.edges)
        if bad:
            raise ValueError(f"{sorted(bad)} are not edges of the base graph")
        return cls({e: int(e in chosen) for e in S.edges})

    def __getitem__(self, e: Edge) -> int:
        return self._values[_norm_edge(*e)]

    def __xor__(self, other: "ChargeFunction") -> "ChargeFunction":
        common = self._values.keys() & other._values.keys()
        return ChargeFunction({e: self._values[e] ^ other._values[e] for e in common})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChargeFunction) and self._values == other._values

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    @property
    def domain(self) -> frozenset[Edge]:
        return frozenset(self._values)

    @property
    def support(self) -> list[Edge]:
        return sorted(e for e, b in self._values.items() if b)

    def __repr__(self) -> str:
        return f"ChargeFunction(support={self.support})"


def incident_edges(S: ColoredGraph, v: int) -> list[Edge]:
    return sorted(_norm_edge(v, w) for w in S.adj[v] if w != v)


def even_assignments(S: ColoredGraph, v: int) -> list[Bits]:
    """Even 0/1 vectors over ``incident_edges(S, v)`` in lexicographic order."""
    d = len(incident_edges(S, v))
    return [bits for bits in product((0, 1), repeat=d) if sum(bits) % 2 == 0]


@dataclass(frozen=True)
class CfiGraph:
    base: ColoredGraph
    charge: ChargeFunction
    realized: ColoredGraph
    owner: tuple[int, ...]  # vertex of realized -> vertex of base
    bits: tuple[Bits, ...]  # vertex of realized -> assignment
    index: dict[tuple[int, Bits], int]

    def vertex(self, v: int, bits: Bits) -> int:
        return self.index[(v, tuple(bits))]


def _check_base(S: ColoredGraph) -> None:
    if not S.is_colorful:
        raise ValueError("base graph must be colorful")
    if S.loops:
        raise ValueError("base graph must be loopless")
    if S.max_degree > MAX_DEGREE:
        raise ValueError(f"maximum degree {S.max_degree} exceeds the cap {MAX_DEGREE}")


def cfi_csp(S: ColoredGraph, c: ChargeFunction | None = None) -> CfiGraph:
    _check_base(S)
    if c is None:
        c = ChargeFunction.indicator(S)
    if c.domain != S.edges:
        raise ValueError("charge must be defined exactly on the edges of the base graph")
    inc = [incident_edges(S, v) for v in range(S.n)]
    pos = [{e: i for i, e in enumerate(inc[v])} for v in range(S.n)]
    owner: list[int] = []
    bits: list[Bits] = []
    index: dict[tuple[int, Bits], int] = {}
    by_vertex: list[list[int]] = []
    for v in range(S.n):
        ids = []
        for a in even_assignments(S, v):
            index[(v, a)] = len(owner)
            ids.append(len(owner))
            owner.append(v)
            bits.append(a)
        by_vertex.append(ids)
    edges = set()
    for e in S.edge_list:
        u, v = e
        iu, iv, ce = pos[u][e], pos[v][e], c[e]
        for x in by_vertex[u]:
            bx = bits[x][iu]
            for y in by_vertex[v]:
                if bx ^ bits[y][iv] == ce:
                    edges.add((x, y))
    colors = tuple(S.vertex_colors[v] for v in owner)
    labels = tuple("".join(map(str, b)) for b in bits)
    realized = ColoredGraph(S.color_set, colors, frozenset(edges), labels)
    return CfiGraph(S, c, realized, tuple(owner), tuple(bits), index)


def default_edge(S: ColoredGraph) -> Edge:
    if not S.edges:
        raise ValueError("base graph has no edges")
    return S.edge_list[0]


def cycle_rank(S: ColoredGraph) -> int:
    """``|E| - |V| + (#components)``; equals ``|E|-|V|+1`` for connected ``S``."""
    from .graph import _component_vertex_sets

    return S.m - S.n + len(_component_vertex_sets(S))


def cfi_filter(S: ColoredGraph, e_star: Edge | None = None) -> QuantumGraph:
    """``(Gamma(S, 0) - Gamma(S, chi_{e*})) / 2^(|E|-|V|+1)``."""
    _check_base(S)
    if not is_connected(S):
        raise ValueError("base graph must be connected; decompose it first")
    if isolated_vertices(S):
        raise ValueError("base graph must not have isolated vertices")
    e = default_edge(S) if e_star is None else _norm_edge(*e_star)
    g0 = cfi_csp(S).realized
    g1 = cfi_csp(S, ChargeFunction.indicator(S, [e])).realized
    coef = Fraction(1, 2 ** (S.m - S.n + 1))
    return QuantumGraph(((g0, coef), (g1, -coef)))


# ---------------------------------------------------------------------------
# Charge pushing
# ---------------------------------------------------------------------------


def push_incident(
    S: ColoredGraph, c: ChargeFunction, vu: Edge, vw: Edge
) -> tuple[dict[int, int], ChargeFunction]:
    """Isomorphism ``Gamma(S, c) -> Gamma(S, c + chi_{vu,vw})`` and the new charge.

    Assignments at the shared endpoint get both bits flipped; everything else
    is fixed.
    """
    vu, vw = _norm_edge(*vu), _norm_edge(*vw)
    shared = set(vu) & set(vw)
    if vu not in S.edges or vw not in S.edges or not shared:
        raise ValueError(f"{vu} and {vw} are not incident edges of the base graph")
    v = min(shared) if vu != vw else vu[0]
    flip = {vu, vw} if vu != vw else set()
    new_c = c ^ ChargeFunction({e: int(e in flip) for e in S.edges})
    src = cfi_csp(S, c)
    dst = cfi_csp(S, new_c)
    inc = incident_edges(S, v)
    mask = tuple(1 if e in flip else 0 for e in inc)
    mapping = {}
    for x in range(src.realized.n):
        z, a = src.owner[x], src.bits[x]
        if z == v:
            a = tuple(b ^ m for b, m in zip(a, mask))
        mapping[x] = dst.vertex(z, a)
    return mapping, new_c


def _edge_path(S: ColoredGraph, e: Edge, e2: Edge) -> list[Edge] | None:
    """Shortest sequence of consecutively incident edges from ``e`` to ``e2``."""
    e, e2 = _norm_edge(*e), _norm_edge(*e2)
    prev: dict[Edge, Edge | None] = {e: None}
    dq = deque([e])
    while dq:
        f = dq.popleft()
        if f == e2:
            path = [f]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for v in f:
            for g in incident_edges(S, v):
                if g not in prev:
                    prev[g] = f
                    dq.append(g)
    return None


def compose(f: Mapping[int, int], g: Mapping[int, int]) -> dict[int, int]:
    """``g`` after ``f``."""
    return {x: g[y] for x, y in f.items()}


def push_along_path(S: ColoredGraph, e: Edge, e2: Edge) -> dict[int, int]:
    """Isomorphism ``Gamma(S, chi_e) -> Gamma(S, chi_e2)``."""
    path = _edge_path(S, e, e2)
    if path is None:
        raise ValueError(f"edges {e} and {e2} lie in different components")
    c = ChargeFunction.indicator(S, [path[0]])
    total = {x: x for x in range(cfi_csp(S, c).realized.n)}
    for f, g in zip(path, path[1:]):
        step, c = push_incident(S, c, f, g)
        total = compose(total, step)
    return total


def deleted_class_isomorphism(
    S: ColoredGraph, S2: ColoredGraph, e_star: Edge | None = None
) -> tuple[dict[int, int], ColoredGraph, ColoredGraph]:
    """Isomorphism ``Gamma(S, chi_{e*}) (x) S2 -> Gamma(S, 0) (x) S2``.

    ``S2`` is a proper subgraph of ``S`` over the same color set. Charge is
    pushed from ``e*`` onto a deleted edge; on the remaining classes the two
    graphs then coincide. Returns the map and both tensored graphs.
    """
    if not is_colorful_subgraph(S2, S):
        raise ValueError("S2 must be a subgraph of S")
    sc = S.vertex_colors
    s2_pairs = {tuple(sorted((S2.vertex_colors[u], S2.vertex_colors[v]))) for u, v in S2.edges}
    deleted = [e for e in S.edge_list if tuple(sorted((sc[e[0]], sc[e[1]]))) not in s2_pairs]
    if not deleted:
        raise ValueError("S2 must miss at least one edge of S")
    if S2.color_set != S.color_set:
        S2 = ColoredGraph(S.color_set, S2.vertex_colors, S2.edges)
    e_star = default_edge(S) if e_star is None else _norm_edge(*e_star)
    target = deleted[0]
    push = push_along_path(S, e_star, target)
    g_star = cfi_csp(S, ChargeFunction.indicator(S, [e_star])).realized
    g_empty = cfi_csp(S).realized
    A = tensor(g_star, S2)
    B = tensor(g_empty, S2)
    # Gamma(S, chi_target) and Gamma(S, 0) share vertex ids; only class `target` differs
    b_index = {pair: i for i, pair in enumerate(B.labels)}
    mapping = {}
    for i, (x, s) in enumerate(A.labels):
        mapping[i] = b_index[(push[x], s)]
    return mapping, A, B
