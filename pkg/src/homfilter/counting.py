"""Exact homomorphism, subgraph and induced-subgraph counts, and motif oracles.

``hom_count`` is the workhorse. It first merges twin vertices of the host
(same color, same closed neighborhood) into weighted classes, which collapses
the blow-ups produced by cardinality filters, then counts either by
backtracking or by a tensor contraction with ``numpy.einsum``.
"""

from __future__ import annotations

import string
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Callable, Literal

import numpy as np

from .graph import (
    ColoredGraph,
    _component_vertex_sets,
    automorphism_count,
    induced_subgraph,
    is_isomorphic,
)

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class _WeightedTarget:
    colors: list[int]
    weights: list[int]
    adj: list[frozenset[int]]
    looped: list[bool]


def _compress(G: ColoredGraph) -> _WeightedTarget:
    groups: dict[tuple, int] = {}
    rep: list[int] = []
    weights: list[int] = []
    for v in range(G.n):
        key = (G.vertex_colors[v], G.adj[v])
        if key in groups:
            weights[groups[key]] += 1
        else:
            groups[key] = len(rep)
            rep.append(v)
            weights.append(1)
    cls_of = {}
    for v in range(G.n):
        cls_of[v] = groups[(G.vertex_colors[v], G.adj[v])]
    adj = [frozenset(cls_of[w] for w in G.adj[r]) for r in rep]
    looped = [r in G.loops for r in rep]
    return _WeightedTarget([G.vertex_colors[r] for r in rep], weights, adj, looped)


def _domains(H: ColoredGraph, vs: list[int], T: _WeightedTarget) -> dict[int, list[int]]:
    by_color: dict[int, list[int]] = {}
    for x, c in enumerate(T.colors):
        by_color.setdefault(c, []).append(x)
    loops = H.loops
    dom = {}
    for v in vs:
        cand = by_color.get(H.vertex_colors[v], [])
        if v in loops:
            cand = [x for x in cand if T.looped[x]]
        dom[v] = cand
    return dom


def _count_backtrack(H: ColoredGraph, vs: list[int], T: _WeightedTarget) -> int:
    dom = _domains(H, vs, T)
    if any(not dom[v] for v in vs):
        return 0
    vset = set(vs)
    nbrs = {v: (H.adj[v] & vset) - {v} for v in vs}

    # greedy maximal independent set (low degree first); the rest is the core
    indep: set[int] = set()
    for v in sorted(vs, key=lambda v: (len(nbrs[v]), len(dom[v]), v)):
        if not (nbrs[v] & indep):
            indep.add(v)
    core = [v for v in vs if v not in indep]
    order: list[int] = []
    placed: set[int] = set()
    rest = set(core)
    while rest:
        v = max(rest, key=lambda v: (len(nbrs[v] & placed), len(nbrs[v]), -len(dom[v]), -v))
        order.append(v)
        placed.add(v)
        rest.discard(v)
    tail = sorted(indep)
    back = [[u for u in order[:i] if u in nbrs[v]] for i, v in enumerate(order)]
    tail_back = [[u for u in order if u in nbrs[v]] for v in tail]
    domset = {v: set(dom[v]) for v in vs}
    w = T.weights
    adj = T.adj
    f: dict[int, int] = {}

    def rec(i: int) -> int:
        if i == len(order):
            total = 1
            for v, bk in zip(tail, tail_back):
                if bk:
                    cand = domset[v].intersection(*(adj[f[u]] for u in bk))
                else:
                    cand = domset[v]
                s = sum(w[x] for x in cand)
                if s == 0:
                    return 0
                total *= s
            return total
        v = order[i]
        bk = back[i]
        if bk:
            cand = domset[v].intersection(*(adj[f[u]] for u in bk))
        else:
            cand = dom[v]
        acc = 0
        for x in cand:
            f[v] = x
            acc += w[x] * rec(i + 1)
        return acc

    return rec(0)


def _count_einsum(H: ColoredGraph, vs: list[int], T: _WeightedTarget) -> int:
    dom = _domains(H, vs, T)
    if any(not dom[v] for v in vs):
        return 0
    bound = prod(sum(T.weights[x] for x in dom[v]) for v in vs)
    dtype = np.int64 if bound < _INT64_SAFE else object
    k = len(T.weights)
    A = np.zeros((k, k), dtype=dtype)
    for x in range(k):
        for y in T.adj[x]:
            A[x, y] = 1
    letters = {v: string.ascii_letters[i] for i, v in enumerate(vs)}
    idx = {v: np.array(dom[v]) for v in vs}
    ops: list = []
    subs: list[str] = []
    # every index ranges over its own color domain only
    for v in vs:
        ops.append(np.array([T.weights[x] for x in dom[v]], dtype=dtype))
        subs.append(letters[v])
    vset = set(vs)
    for u, v in H.edges:
        if u != v and u in vset:
            ops.append(A[np.ix_(idx[u], idx[v])])
            subs.append(letters[u] + letters[v])
    expr = ",".join(subs) + "->"
    res = np.einsum(expr, *ops, optimize="greedy")
    return int(res)


Method = Literal["auto", "backtrack", "einsum"]


def hom_count(H: ColoredGraph, G: ColoredGraph, method: Method = "auto") -> int:
    """Number of color-preserving homomorphisms ``H -> G``.

    Colors are compared by value; a pattern vertex whose color is absent from
    the host has no image. Self-loops in ``H`` must land on looped host vertices.
    """
    if H.n == 0:
        return 1
    T = G.__dict__.get("_weighted_target")
    if T is None:
        T = _compress(G)
        G.__dict__["_weighted_target"] = T  # graphs are immutable, so this is a safe memo
    total = 1
    for comp in _component_vertex_sets(H):
        if method == "backtrack" or (method == "auto" and (len(comp) <= 2 or len(T.weights) <= 12)):
            c = _count_backtrack(H, comp, T)
        elif len(comp) > len(string.ascii_letters):
            c = _count_backtrack(H, comp, T)
        else:
            c = _count_einsum(H, comp, T)
        if c == 0:
            return 0
        total *= c
    return total


def hom_count_naive(H: ColoredGraph, G: ColoredGraph) -> int:
    """Literal enumeration over all color-respecting maps (tiny inputs only)."""
    from itertools import product

    doms = [[x for x in range(G.n) if G.vertex_colors[x] == H.vertex_colors[v]] for v in range(H.n)]
    count = 0
    for f in product(*doms):
        if all(G.has_edge(f[u], f[v]) for u, v in H.edges):
            count += 1
    return count


def inj_count(H: ColoredGraph, G: ColoredGraph) -> int:
    """Injective color-preserving homomorphisms, by plain backtracking."""
    if H.n > G.n:
        return 0
    order = sorted(range(H.n), key=lambda v: -len(H.adj[v]))
    back = [[u for u in order[:i] if u in H.adj[v]] for i, v in enumerate(order)]
    doms = [[x for x in range(G.n) if G.vertex_colors[x] == H.vertex_colors[v]] for v in range(H.n)]
    hl = H.loops
    f = [-1] * H.n
    used = [False] * G.n

    def rec(i: int) -> int:
        if i == len(order):
            return 1
        v = order[i]
        acc = 0
        for x in doms[v]:
            if used[x]:
                continue
            if v in hl and x not in G.loops:
                continue
            if any(f[u] not in G.adj[x] for u in back[i]):
                continue
            f[v] = x
            used[x] = True
            acc += rec(i + 1)
            used[x] = False
        f[v] = -1
        return acc

    return rec(0)


def sub_count(H: ColoredGraph, G: ColoredGraph, aut_cap: int = 10) -> int:
    """Subgraphs of ``G`` isomorphic to ``H``: injective homs over ``|aut(H)|``."""
    inj = inj_count(H, G)
    aut = automorphism_count(H, cap=aut_cap)
    q, r = divmod(inj, aut)
    assert r == 0, "injective count must be divisible by |aut(H)|"
    return q


def ind_count(H: ColoredGraph, G: ColoredGraph) -> int:
    """Vertex subsets of ``G`` whose induced subgraph is isomorphic to ``H``."""
    if H.n > G.n:
        return 0
    want = sorted(H.vertex_colors)
    count = 0
    for subset in combinations(range(G.n), H.n):
        if sorted(G.vertex_colors[v] for v in subset) != want:
            continue
        sub = induced_subgraph(G, subset, color_set=H.color_set)
        if sub.m == H.m and is_isomorphic(sub, H) is not None:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


@dataclass
class MotifOracle:
    """Black-box graph parameter with a call ledger.

    ``support_bound`` is the largest pattern size in the parameter's
    hom-expansion. The ledger (``calls``, ``max_size``) is the only mutable
    state and is updated under a lock.
    """

    evaluator: Callable[[ColoredGraph], Fraction | int]
    support_bound: int
    pure: bool = True
    name: str = "oracle"
    calls: int = 0
    max_size: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __call__(self, G: ColoredGraph) -> Fraction:
        with self._lock:
            self.calls += 1
            self.max_size = max(self.max_size, G.n)
        return Fraction(self.evaluator(G))

    def reset(self) -> None:
        with self._lock:
            self.calls = 0
            self.max_size = 0


OracleKind = Literal["hom", "sub", "ind"]


def make_oracle(kind: OracleKind, pattern: ColoredGraph, direct: bool = False) -> MotifOracle:
    """Wrap one of the three counters as a motif oracle.

    ``sub`` and ``ind`` oracles evaluate their hom-expansion by default, which
    stays fast on the large hosts the reduction produces; ``direct=True``
    uses the brute-force counters instead.
    """
    if kind == "hom":
        ev: Callable[[ColoredGraph], int] = lambda G: hom_count(pattern, G)
    elif kind in ("sub", "ind"):
        if direct:
            fn = sub_count if kind == "sub" else ind_count
            ev = lambda G: fn(pattern, G)
        else:
            from .expansion import ind_hom_expansion, sub_hom_expansion

            exp = sub_hom_expansion(pattern) if kind == "sub" else ind_hom_expansion(pattern)
            terms = [(g, c) for g, c in exp.terms]

            def ev(G: ColoredGraph) -> Fraction:
                has_loops = bool(G.loops)
                total = Fraction(0)
                for g, c in terms:
                    if g.loops and not has_loops:
                        continue
                    total += c * hom_count(g, G)
                return total
    else:
        raise ValueError(f"unknown oracle kind {kind!r}")
    return MotifOracle(ev, support_bound=pattern.n, name=f"{kind}({pattern.n}v,{pattern.m}e)")


def evaluate_expansion(Q, G: ColoredGraph) -> Fraction:
    """Evaluate ``sum(coef * hom(F, G))`` for a hom-expansion ``Q``."""
    return sum((c * hom_count(g, G) for g, c in Q.terms), Fraction(0))
