"""Recover ``hom(S, G)`` for colorful ``S`` from black-box access to a motif parameter.

Per connected component ``S_i`` of ``S``: pad the host to a ``T``-colored
graph, tensor it with a color-surjectivity filter for ``S_i`` (padded the same
way) and with a cardinality filter, evaluate the color-lifted oracle, and
divide by the value the same pipeline produces on the host ``S_i`` itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Mapping, Sequence

from .cfi import cfi_filter
from .counting import MotifOracle
from .filters import ColorCoarsening, apply_filters, cardinality_filter, inclusion_exclusion_filter
from .graph import (
    ColoredGraph,
    _norm_edge,
    connected_components,
    is_colorful_subgraph,
    is_connected,
    restrict_to_colors,
    strip_colors,
)
from .quantum import QuantumGraph


class ReductionCase(str, enum.Enum):
    A = "a"  # S = T
    B = "b"  # same sign on all |V(T)|-vertex constituents
    C = "c"  # T° edge-minimal among |V(T)|-vertex constituents


class PromiseViolation(ArithmeticError):
    """The normalization vanished, so the case promise does not hold for ``p``."""


@dataclass
class ReductionReport:
    result: Fraction
    oracle_calls: int
    max_call_size: int
    normalization: Fraction
    component_normalizations: list[Fraction] = field(default_factory=list)
    calls_per_evaluation: list[int] = field(default_factory=list)
    filter_kind: str = "cfi"

    def to_json(self) -> dict:
        return {
            "result": str(self.result),
            "oracle_calls": self.oracle_calls,
            "max_call_size": self.max_call_size,
            "normalization": str(self.normalization),
            "component_normalizations": [str(q) for q in self.component_normalizations],
            "calls_per_evaluation": self.calls_per_evaluation,
            "filter": self.filter_kind,
        }


def lift_colored(p: MotifOracle) -> MotifOracle:
    """Colored oracle ``G -> p(G°)``."""
    return MotifOracle(
        lambda G: p(strip_colors(G)),
        support_bound=p.support_bound,
        pure=p.pure,
        name=f"col[{p.name}]",
    )


def lift_expansion(Q: QuantumGraph, color_set: Sequence[int]) -> QuantumGraph:
    """Hom-expansion of ``G -> sum_F a_F hom(F, G°)`` over ``color_set``-colored hosts.

    Every coloring ``c`` of a constituent contributes ``F_c`` with the
    coefficient of ``F``; equal colored graphs are collected.
    """
    from itertools import product

    from .graph import apply_coloring
    from .quantum import collect

    cs = tuple(color_set)
    terms = []
    for F, a in Q.terms:
        for cols in product(cs, repeat=F.n):
            terms.append((apply_coloring(F, cols, color_set=cs), a))
    return collect(terms)


def _t_vertex_of_color(T: ColoredGraph) -> dict[int, int]:
    return {c: v for v, c in enumerate(T.vertex_colors)}


def pad_host(G: ColoredGraph, S: ColoredGraph, T: ColoredGraph) -> ColoredGraph:
    """``T``-colored padding of an ``S``-colored host.

    Adds one vertex for every color of ``T`` missing from ``S``, and all edges
    between color classes ``i, j`` for every edge ``ij`` of ``T`` not in ``S``.
    """
    if not is_colorful_subgraph(S, T):
        raise ValueError("S must be a subgraph of T")
    s_colors = set(S.vertex_colors)
    if any(c not in s_colors for c in G.vertex_colors):
        raise ValueError("host uses colors outside S")
    tc = T.vertex_colors
    sc = S.vertex_colors
    s_pairs = {tuple(sorted((sc[u], sc[v]))) for u, v in S.edges}
    extra_colors = [c for c in tc if c not in s_colors]
    cols = list(G.vertex_colors) + extra_colors
    labels = None
    if G.labels is not None:
        labels = list(G.labels) + [("pad", c) for c in extra_colors]
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(cols):
        by_color.setdefault(c, []).append(v)
    edges = set(G.edges)
    for u, v in T.edges:
        pair = tuple(sorted((tc[u], tc[v])))
        if pair in s_pairs:
            continue
        for x in by_color.get(pair[0], []):
            for y in by_color.get(pair[1], []):
                edges.add(_norm_edge(x, y))
    return ColoredGraph(T.color_set, tuple(cols), frozenset(edges), labels)


def _pad_quantum(Q: QuantumGraph, S: ColoredGraph, T: ColoredGraph) -> QuantumGraph:
    return QuantumGraph(tuple((pad_host(g, S, T), c) for g, c in Q.terms))


def _host_over(G: ColoredGraph, S: ColoredGraph) -> ColoredGraph:
    """Restrict ``G`` to the colors of ``S`` and to edges lying over edges of ``S``."""
    sc = S.vertex_colors
    pairs = {tuple(sorted((sc[u], sc[v]))) for u, v in S.edges}
    R = restrict_to_colors(G, S.color_set)
    gc = R.vertex_colors
    edges = frozenset(e for e in R.edges if tuple(sorted((gc[e[0]], gc[e[1]]))) in pairs)
    return ColoredGraph(S.color_set, R.vertex_colors, edges, R.labels)


def component_pipeline(
    Si: ColoredGraph,
    T: ColoredGraph,
    s: int,
    p_col: MotifOracle,
    Gi: ColoredGraph,
    filter_kind: Literal["cfi", "ie"] = "cfi",
    normalization: Fraction | None = None,
    split_rest: bool = False,
) -> tuple[Fraction, Fraction, list[int]]:
    """``(hom(Si, Gi), q, [calls per evaluation])`` for a connected component ``Si``.

    With ``split_rest`` every color of ``T`` outside ``Si`` becomes its own
    part of the coarsening with target 1, so only colorful ``T``-colored
    graphs survive the cardinality filter.
    """
    if filter_kind == "cfi":
        X = cfi_filter(Si)
    elif filter_kind == "ie":
        X = inclusion_exclusion_filter(Si)
    else:
        raise ValueError(f"unknown filter {filter_kind!r}")
    X = _pad_quantum(X, Si, T)
    s_colors = tuple(Si.color_set)
    rest = tuple(c for c in T.color_set if c not in set(s_colors))
    if rest and split_rest and len(rest) > 1:
        eta = ColorCoarsening((s_colors,) + tuple((c,) for c in rest), (Si.n,) + (1,) * len(rest))
    elif rest:
        eta = ColorCoarsening((s_colors, rest), (Si.n, T.n - Si.n))
    else:
        eta = ColorCoarsening((s_colors,), (Si.n,))
    N = cardinality_filter(eta, s)
    filters = [X, N]
    calls = []

    before = p_col.calls
    value = apply_filters(p_col, filters, pad_host(Gi, Si, T))
    calls.append(p_col.calls - before)
    if normalization is None:
        before = p_col.calls
        normalization = apply_filters(p_col, filters, pad_host(Si, Si, T))
        calls.append(p_col.calls - before)
    if normalization == 0:
        raise PromiseViolation(
            "normalization is zero: the case condition does not hold for this parameter"
        )
    return value / normalization, normalization, calls


def reduce_hom(
    S: ColoredGraph,
    T: ColoredGraph,
    s: int,
    p: MotifOracle,
    case: ReductionCase | str,
    G: ColoredGraph,
    filter_kind: Literal["cfi", "ie"] = "cfi",
    normalizations: Mapping[int, Fraction] | None = None,
) -> ReductionReport:
    """``hom(S, G)`` from an oracle for an uncolored motif parameter ``p``.

    In case (c) the colors of ``T`` outside a component each get their own
    cardinality part: with a single shared part, recolorings of ``T°`` that
    repeat one of those colors also survive the filters, and they can cancel
    against recolored edge-supersets.

    The case condition is a promise about ``p`` and is not checked; a zero
    normalization raises :class:`PromiseViolation`. ``normalizations`` may
    supply precomputed per-component values (keyed by component index) to
    skip the runs on ``G = S_i``.
    """
    case = ReductionCase(case)
    if not (S.is_colorful and T.is_colorful):
        raise ValueError("S and T must be colorful")
    if not is_colorful_subgraph(S, T):
        raise ValueError("S must be a subgraph of T")
    if case is ReductionCase.A and (set(S.vertex_colors) != set(T.vertex_colors) or S.m != T.m):
        raise ValueError("case (a) requires S = T")
    if T.n > s:
        raise ValueError(f"T has {T.n} vertices but the support bound is {s}")
    if any(c not in set(S.vertex_colors) for c in G.vertex_colors):
        raise ValueError("host uses colors outside S")

    p_col = lift_colored(p)
    result = Fraction(1)
    qs: list[Fraction] = []
    calls: list[int] = []
    comps = connected_components(S)
    for idx, Si in enumerate(comps):
        if Si.m == 0:
            # isolated vertex: any vertex of its color
            result *= G.vertex_colors.count(Si.vertex_colors[0])
            continue
        Gi = _host_over(G, Si)
        given = None if normalizations is None else normalizations.get(idx)
        split = case is ReductionCase.C
        val, q, c = component_pipeline(Si, T, s, p_col, Gi, filter_kind, given, split)
        result *= val
        qs.append(q)
        calls.extend(c)
    total_q = Fraction(1)
    for q in qs:
        total_q *= q
    return ReductionReport(
        result=result,
        oracle_calls=p_col.calls,
        max_call_size=p_col.max_size,
        normalization=total_q,
        component_normalizations=qs,
        calls_per_evaluation=calls,
        filter_kind=filter_kind,
    )


# ---------------------------------------------------------------------------
# Minor models
# ---------------------------------------------------------------------------


def is_minor_model(A: ColoredGraph, B: ColoredGraph, model: Mapping[int, Sequence[int]]) -> bool:
    if set(model) != set(range(A.n)):
        return False
    seen: set[int] = set()
    for v, bs in model.items():
        bs = set(bs)
        if not bs or bs & seen or any(not (0 <= b < B.n) for b in bs):
            return False
        seen |= bs
        sub = restrict_vertices(B, sorted(bs))
        if not is_connected(sub):
            return False
    for u, v in A.edges:
        if u == v:
            return False
        if not any(B.has_edge(x, y) for x in model[u] for y in model[v]):
            return False
    return True


def restrict_vertices(G: ColoredGraph, vs: Sequence[int]) -> ColoredGraph:
    from .graph import induced_subgraph

    return induced_subgraph(G, vs)


def minor_lift(
    A: ColoredGraph, B: ColoredGraph, model: Mapping[int, Sequence[int]], G: ColoredGraph
) -> ColoredGraph:
    """B-colored host ``G'`` with ``hom(A, G) = hom(B, G')``.

    Each branch vertex ``b`` in the branch set of ``v`` receives a copy
    ``(x, b)`` of every ``v``-colored vertex ``x`` of ``G``. Inside a branch
    set copies of the same ``x`` are joined; across branch sets of adjacent
    ``u, v`` copies are joined iff ``xy`` is an edge of ``G``; across
    non-adjacent branch sets everything is joined. Vertices of ``B`` outside
    the model get a single vertex joined to everything it may touch. Isolated
    vertices on a non-isolated color of ``B`` bring the total to
    ``|V(G)| * |V(B)|`` without creating homomorphisms.
    """
    if not (A.is_colorful and B.is_colorful):
        raise ValueError("A and B must be colorful")
    if not is_minor_model(A, B, model):
        raise ValueError("invalid minor model")
    a_color = A.vertex_colors
    branch_of: dict[int, int] = {}
    for v, bs in model.items():
        for b in bs:
            branch_of[b] = v
    cols: list[int] = []
    labels: list = []
    copies: dict[int, list[tuple[int, int]]] = {}  # b -> [(x, vertex id)]
    for b in range(B.n):
        copies[b] = []
        if b in branch_of:
            v = branch_of[b]
            for x in range(G.n):
                if G.vertex_colors[x] == a_color[v]:
                    copies[b].append((x, len(cols)))
                    cols.append(B.vertex_colors[b])
                    labels.append((x, b))
        else:
            copies[b].append((-1, len(cols)))
            cols.append(B.vertex_colors[b])
            labels.append((None, b))
    edges: set[tuple[int, int]] = set()
    for b1, b2 in B.edges:
        v1, v2 = branch_of.get(b1), branch_of.get(b2)
        for x, i in copies[b1]:
            for y, j in copies[b2]:
                if v1 is not None and v1 == v2:
                    ok = x == y
                elif v1 is not None and v2 is not None and A.has_edge(v1, v2):
                    ok = G.has_edge(x, y)
                else:
                    ok = True
                if ok:
                    edges.add(_norm_edge(i, j))
    target = G.n * B.n
    pad_b = next((b for b in range(B.n) if B.degree(b) > 0), None)
    if pad_b is not None:
        while len(cols) < target:
            cols.append(B.vertex_colors[pad_b])
            labels.append(("pad", pad_b))
    return ColoredGraph(B.color_set, tuple(cols), frozenset(edges), tuple(labels))
