"""Quantum graphs: finite rational combinations of colored graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .graph import ColoredGraph, _norm_edge, canonical_form, relabel

if TYPE_CHECKING:
    from .counting import MotifOracle


@dataclass(frozen=True)
class QuantumGraph:
    """``sum(coef * graph)`` over pairwise non-isomorphic constituents.

    The constructor only checks coefficients and color sets. Constituents
    coming from an arbitrary source should go through :func:`collect`, which
    merges isomorphic terms; the filter constructors build their terms
    directly because their constituents are non-isomorphic by construction.
    """

    terms: tuple[tuple[ColoredGraph, Fraction], ...]

    def __post_init__(self) -> None:
        terms = tuple((g, Fraction(c)) for g, c in self.terms)
        object.__setattr__(self, "terms", terms)
        if any(c == 0 for _, c in terms):
            raise ValueError("quantum graph coefficients must be nonzero")
        if len({g.color_set for g, _ in terms}) > 1:
            raise ValueError("all constituents must share one color set")

    @classmethod
    def single(cls, G: ColoredGraph, coef: Fraction | int = 1) -> "QuantumGraph":
        return cls(((G, Fraction(coef)),))

    @property
    def constituents(self) -> list[ColoredGraph]:
        return [g for g, _ in self.terms]

    @property
    def coefficients(self) -> list[Fraction]:
        return [c for _, c in self.terms]

    @property
    def color_set(self) -> tuple[int, ...] | None:
        return self.terms[0][0].color_set if self.terms else None

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[ColoredGraph, Fraction]]:
        return iter(self.terms)

    def scaled(self, factor: Fraction | int) -> "QuantumGraph":
        factor = Fraction(factor)
        if factor == 0:
            return QuantumGraph(())
        return QuantumGraph(tuple((g, c * factor) for g, c in self.terms))

    def __add__(self, other: "QuantumGraph") -> "QuantumGraph":
        return collect(list(self.terms) + list(other.terms))

    def __sub__(self, other: "QuantumGraph") -> "QuantumGraph":
        return self + other.scaled(-1)


def _sort_key(cert: tuple, g: ColoredGraph) -> tuple:
    return (g.n, g.m, cert)


def collect(terms: Iterable[tuple[ColoredGraph, Fraction | int]]) -> QuantumGraph:
    """Merge isomorphic constituents, drop zero terms, order canonically.

    Each constituent is replaced by its canonical relabeling, so the output
    is identical for any permutation or relabeling of the input.
    """
    acc: dict[tuple, list] = {}
    for g, c in terms:
        cert, perm = canonical_form(g)
        if cert in acc:
            acc[cert][1] += Fraction(c)
        else:
            acc[cert] = [relabel(g, perm), Fraction(c)]
    if len({cert[0] for cert in acc}) > 1:
        raise ValueError("cannot collect graphs over different color sets")
    out = [(g, c) for cert, (g, c) in sorted(acc.items(), key=lambda kv: _sort_key(kv[0], kv[1][0])) if c != 0]
    return QuantumGraph(tuple(out))


def tensor(G: ColoredGraph, X: ColoredGraph) -> ColoredGraph:
    """Color-wise product ``G (x) X``.

    Vertices of color ``i`` are the pairs ``V_i(G) x V_i(X)``, ordered by color
    and then lexicographically; ``labels`` records the pair. Two pairs are
    adjacent iff both coordinates are adjacent.
    """
    if G.color_set != X.color_set:
        raise ValueError(f"color sets differ: {G.color_set} vs {X.color_set}")
    index: dict[tuple[int, int], int] = {}
    cols: list[int] = []
    x_by_color: dict[int, list[int]] = {}
    for x, c in enumerate(X.vertex_colors):
        x_by_color.setdefault(c, []).append(x)
    for c in G.color_set:
        xs = x_by_color.get(c, [])
        for g in G.color_class(c):
            for x in xs:
                index[(g, x)] = len(cols)
                cols.append(c)

    # oriented X-edges grouped by endpoint colors
    x_edges: dict[tuple[int, int], list[tuple[int, int]]] = {}
    xc = X.vertex_colors
    for a, b in X.edges:
        x_edges.setdefault((xc[a], xc[b]), []).append((a, b))
        if a != b:
            x_edges.setdefault((xc[b], xc[a]), []).append((b, a))
    gc = G.vertex_colors
    edges = set()
    for u, v in G.edges:
        for gu, gv in ((u, v), (v, u)) if u != v else ((u, v),):
            for xa, xb in x_edges.get((gc[gu], gc[gv]), ()):
                edges.add(_norm_edge(index[(gu, xa)], index[(gv, xb)]))
    labels = [None] * len(cols)
    for pair, i in index.items():
        labels[i] = pair
    return ColoredGraph(G.color_set, tuple(cols), frozenset(edges), tuple(labels))


def tensor_quantum(Q1: QuantumGraph, Q2: QuantumGraph) -> QuantumGraph:
    return collect(
        (tensor(g, x), a * b) for g, a in Q1.terms for x, b in Q2.terms
    )


def evaluate_linear(p: "MotifOracle", Q: QuantumGraph) -> Fraction:
    """``sum(coef * p(constituent))`` with one oracle call per constituent."""
    total = Fraction(0)
    for g, c in Q.terms:
        total += c * p(g)
    return total


def hom_into(F: ColoredGraph, Q: QuantumGraph) -> Fraction:
    """``hom(F, Q)`` extended linearly over the constituents of ``Q``."""
    from .counting import hom_count

    return sum((c * hom_count(F, g) for g, c in Q.terms), Fraction(0))


def from_pairs(graphs: Sequence[ColoredGraph], coefs: Sequence[Fraction | int]) -> QuantumGraph:
    if len(graphs) != len(coefs):
        raise ValueError("need one coefficient per constituent")
    return collect(zip(graphs, coefs))
