"""Cardinality and inclusion-exclusion filters, and filter application."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .counting import MotifOracle
from .graph import ColoredGraph
from .quantum import QuantumGraph, tensor


@dataclass(frozen=True)
class ColorCoarsening:
    """Parts ``C_1..C_r`` of a color set with vertex targets ``k_1..k_r``."""

    parts: tuple[tuple[int, ...], ...]
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "targets", tuple(int(k) for k in self.targets))
        if not parts:
            raise ValueError("a coarsening needs at least one part")
        if len(parts) != len(self.targets):
            raise ValueError("need one target per part")
        flat = [c for p in parts for c in p]
        if len(flat) != len(set(flat)):
            raise ValueError("parts must be disjoint")
        if any(k < 0 for k in self.targets):
            raise ValueError("targets must be non-negative")

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def color_set(self) -> tuple[int, ...]:
        return tuple(sorted(c for p in self.parts for c in p))

    def part_counts(self, H: ColoredGraph) -> tuple[int, ...]:
        sizes = H.class_sizes
        return tuple(sum(sizes.get(c, 0) for c in p) for p in self.parts)

    def is_coarsened(self, H: ColoredGraph) -> bool:
        return self.part_counts(H) == self.targets


def looped_template(eta: ColorCoarsening, a: Sequence[int]) -> ColoredGraph:
    """``a_i`` looped vertices of each color in part ``i``, all pairwise adjacent."""
    if len(a) != eta.r or any(x < 1 for x in a):
        raise ValueError("need one positive multiplicity per part")
    cols: list[int] = []
    for part, ai in zip(eta.parts, a):
        for c in part:
            cols.extend([c] * ai)
    n = len(cols)
    edges = [(u, v) for u in range(n) for v in range(u, n)]
    return ColoredGraph.from_edges(n, edges, colors=cols, color_set=eta.color_set)


def solve_exact(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system by Gauss-Jordan elimination over Q."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        if p != 1:
            M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _univariate_weights(k: int, s: int) -> tuple[Fraction, ...]:
    """``w`` with ``sum_a w_a a^d = [d == k]`` for ``d = 0..s`` at points ``a = 1..s+1``."""
    points = range(1, s + 2)
    A = [[Fraction(a**d) for a in points] for d in range(s + 1)]
    rhs = [Fraction(int(d == k)) for d in range(s + 1)]
    return tuple(solve_exact(A, rhs))


@lru_cache(maxsize=None)
def _interpolation_weights(targets: tuple[int, ...], s: int) -> dict[tuple[int, ...], Fraction]:
    """``beta`` with ``sum_a beta_a prod a_i^{d_i} = [d == targets]`` for all ``d`` in ``[0..s]^r``.

    The multivariate system is the Kronecker power of the univariate
    Vandermonde system, so ``beta_a`` is the product of univariate weights.
    """
    per_part = [_univariate_weights(k, s) for k in targets]
    out = {}
    for a in product(range(1, s + 2), repeat=len(targets)):
        w = Fraction(1)
        for ai, ws in zip(a, per_part):
            w *= ws[ai - 1]
        out[a] = w
    return out


def interpolation_weights_direct(targets: tuple[int, ...], s: int) -> dict[tuple[int, ...], Fraction]:
    """Reference: solve the full ``(s+1)^r`` system in one elimination."""
    r = len(targets)
    points = list(product(range(1, s + 2), repeat=r))
    exps = list(product(range(s + 1), repeat=r))
    A = [[Fraction(_monomial(a, d)) for a in points] for d in exps]
    rhs = [Fraction(int(d == targets)) for d in exps]
    return dict(zip(points, solve_exact(A, rhs)))


def _monomial(a: Sequence[int], d: Sequence[int]) -> int:
    out = 1
    for x, e in zip(a, d):
        out *= x**e
    return out


def cardinality_filter(eta: ColorCoarsening, s: int) -> QuantumGraph:
    """Filters the ``eta``-coarsened graphs out of the graphs on ``<= s`` vertices."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if sum(eta.targets) > s:
        raise ValueError(f"targets {eta.targets} cannot be met by graphs on <= {s} vertices")
    beta = _interpolation_weights(eta.targets, s)
    terms = [(looped_template(eta, a), c) for a, c in sorted(beta.items()) if c != 0]
    return QuantumGraph(tuple(terms))


def vertex_count_filter(k: int, s: int, color_set: Sequence[int] = (0,)) -> QuantumGraph:
    """Graphs with exactly ``k`` vertices among those with ``<= s`` vertices."""
    return cardinality_filter(ColorCoarsening((tuple(color_set),), (k,)), s)


def inclusion_exclusion_filter(S: ColoredGraph, cap: int = 20) -> QuantumGraph:
    """``sum_{F <= S} (-1)^{|E(S)|-|E(F)|} F`` over spanning edge-subgraphs ``F``."""
    if S.m > cap:
        raise ValueError(f"{S.m} edges exceeds the inclusion-exclusion cap {cap}")
    if not S.is_colorful:
        raise ValueError("S must be colorful")
    edges = S.edge_list
    terms = []
    for k in range(S.m, -1, -1):
        for sub in combinations(edges, k):
            F = ColoredGraph(S.color_set, S.vertex_colors, frozenset(sub))
            terms.append((F, Fraction((-1) ** (S.m - k))))
    return QuantumGraph(tuple(terms))


def apply_filters(p: MotifOracle, filters: Sequence[QuantumGraph], G: ColoredGraph) -> Fraction:
    """``p(G (x) F_1 (x) ... (x) F_q)`` with one oracle call per constituent combination.

    Partial products are reused along the way, but the full tensor of quantum
    graphs is never formed.
    """
    for F in filters:
        if F.color_set is not None and F.color_set != G.color_set:
            raise ValueError(f"filter color set {F.color_set} differs from host {G.color_set}")

    def rec(i: int, host: ColoredGraph, coef: Fraction) -> Fraction:
        if i == len(filters):
            return coef * p(host)
        total = Fraction(0)
        for X, c in filters[i].terms:
            total += rec(i + 1, tensor(host, X), coef * c)
        return total

    return rec(0, G, Fraction(1))
