"""Hom-expansions of subgraph and induced-subgraph counts.

``inj(H, .) = sum_sigma mu(sigma) hom(H/sigma, .)`` over color-respecting
partitions ``sigma`` of ``V(H)``, with the partition-lattice Mobius value
``mu(sigma) = prod_B (-1)^(|B|-1) (|B|-1)!``; then ``sub = inj / |aut(H)|``.
Induced counts invert once more over edge supersets on the same vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterator, Literal, Sequence

from .graph import (
    ColoredGraph,
    _norm_edge,
    automorphism_count,
    is_colorful_subgraph,
    isolated_vertices,
)
from .quantum import QuantumGraph, collect

Partition = tuple[tuple[int, ...], ...]


def set_partitions(items: Sequence[int]) -> Iterator[Partition]:
    """All set partitions of ``items`` (restricted-growth order)."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1 :]


def colored_partitions(H: ColoredGraph) -> Iterator[Partition]:
    """Partitions of ``V(H)`` whose blocks are monochromatic."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(H.vertex_colors):
        by_color.setdefault(c, []).append(v)
    groups = [by_color[c] for c in sorted(by_color)]

    def rec(i: int) -> Iterator[Partition]:
        if i == len(groups):
            yield ()
            return
        for p in set_partitions(groups[i]):
            for q in rec(i + 1):
                yield p + q

    for part in rec(0):
        yield tuple(sorted(tuple(sorted(b)) for b in part))


def mobius_from_bottom(partition: Partition) -> int:
    return _prod((-1) ** (len(b) - 1) * factorial(len(b) - 1) for b in partition)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def quotient_graph(H: ColoredGraph, partition: Partition) -> ColoredGraph:
    """Identify each block to one vertex; inner edges become loops."""
    block_of = {}
    for i, b in enumerate(partition):
        for v in b:
            block_of[v] = i
    cols = []
    for b in partition:
        cs = {H.vertex_colors[v] for v in b}
        if len(cs) != 1:
            raise ValueError("blocks must be monochromatic")
        cols.append(cs.pop())
    edges = {_norm_edge(block_of[u], block_of[v]) for u, v in H.edges}
    return ColoredGraph(H.color_set, tuple(cols), frozenset(edges))


def quotients(H: ColoredGraph, cap: int = 9, dedupe: bool = False) -> list[tuple[ColoredGraph, Partition]]:
    """Every color-respecting quotient of ``H`` with its partition.

    With ``dedupe`` only the first partition of each isomorphism class is kept.
    """
    if H.n > cap:
        raise ValueError(f"{H.n} vertices exceeds the quotient cap {cap}")
    out = [(quotient_graph(H, p), p) for p in colored_partitions(H)]
    if not dedupe:
        return out
    from .graph import canonical_form

    seen = set()
    kept = []
    for g, p in out:
        cert, _ = canonical_form(g)
        if cert not in seen:
            seen.add(cert)
            kept.append((g, p))
    return kept


@dataclass(frozen=True)
class HomExpansion:
    """A hom-expansion together with what it expands."""

    kind: Literal["sub", "ind", "hom"]
    pattern: ColoredGraph
    quantum: QuantumGraph

    @property
    def terms(self):
        return self.quantum.terms

    def coefficient_of(self, F: ColoredGraph) -> Fraction:
        from .graph import canonical_form

        cert, _ = canonical_form(F)
        for g, c in self.quantum.terms:
            if canonical_form(g)[0] == cert:
                return c
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.quantum)


def inj_hom_expansion(H: ColoredGraph, cap: int = 9) -> QuantumGraph:
    if H.n > cap:
        raise ValueError(f"{H.n} vertices exceeds the quotient cap {cap}")
    return collect((quotient_graph(H, p), mobius_from_bottom(p)) for p in colored_partitions(H))


def sub_hom_expansion(H: ColoredGraph, cap: int = 9) -> HomExpansion:
    aut = automorphism_count(H, cap=max(cap, H.n))
    return HomExpansion("sub", H, inj_hom_expansion(H, cap).scaled(Fraction(1, aut)))


def ind_hom_expansion(H: ColoredGraph, cap: int = 7) -> HomExpansion:
    """Expansion of ``ind(H, .)`` valid on loopless hosts.

    Strong embeddings satisfy ``emb(H) = sum_{H' >= H} (-1)^{|E(H')|-|E(H)|} inj(H')``
    over the labeled loopless edge supersets ``H'`` on ``V(H)``, and
    ``ind = emb / |aut(H)|``.
    """
    if H.n > cap:
        raise ValueError(f"{H.n} vertices exceeds the induced-expansion cap {cap}")
    if H.loops:
        raise ValueError("induced expansions are defined for loopless patterns")
    missing = [e for e in combinations(range(H.n), 2) if e not in H.edges]
    aut = automorphism_count(H, cap=max(cap, H.n))
    terms: list[tuple[ColoredGraph, Fraction]] = []
    for k in range(len(missing) + 1):
        sign = (-1) ** k
        for extra in combinations(missing, k):
            Hp = ColoredGraph(H.color_set, H.vertex_colors, H.edges | frozenset(extra))
            for g, c in inj_hom_expansion(Hp, cap=max(cap, H.n)).terms:
                terms.append((g, c * sign / aut))
    return HomExpansion("ind", H, collect(terms))


def hom_expansion_of(kind: str, H: ColoredGraph) -> HomExpansion:
    if kind == "sub":
        return sub_hom_expansion(H)
    if kind == "ind":
        return ind_hom_expansion(H)
    if kind == "hom":
        return HomExpansion("hom", H, collect([(H, 1)]))
    raise ValueError(f"unknown expansion kind {kind!r}")


# ---------------------------------------------------------------------------
# Matching quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientWitness:
    partition: Partition
    embedding: dict[int, int]  # vertex of S -> vertex of T


def is_matching(H: ColoredGraph, M: Sequence[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in M:
        if u == v or not H.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def matching_quotient_embed(
    S: ColoredGraph, H: ColoredGraph, M: Sequence[tuple[int, int]]
) -> tuple[ColoredGraph, QuotientWitness]:
    """A colorful ``T`` containing ``S`` with ``T°`` a quotient of ``H``.

    The ``i``-th edge of ``S`` (in sorted order) is laid onto the ``i``-th
    matching edge, and matching endpoints sent to the same vertex of ``S`` are
    identified. Vertices of ``T`` coming from ``S`` keep the colors of ``S``;
    the remaining blocks (singletons of ``H``) get fresh colors.
    """
    if not S.is_colorful:
        raise ValueError("S must be colorful")
    if isolated_vertices(S):
        raise ValueError("S must not have isolated vertices")
    if not is_matching(H, M):
        raise ValueError("M is not a matching of H")
    if len(M) < S.m:
        raise ValueError(f"matching has {len(M)} edges but S has {S.m}")
    if S.loops:
        raise ValueError("S must be loopless")

    owner: dict[int, int] = {}  # H vertex -> S vertex
    for (a, b), (x, y) in zip(S.edge_list, M):
        owner[x] = a
        owner[y] = b
    blocks: list[list[int]] = [[] for _ in range(S.n)]
    for x, a in owner.items():
        blocks[a].append(x)
    rest = [x for x in range(H.n) if x not in owner]
    partition = [tuple(sorted(b)) for b in blocks] + [(x,) for x in rest]

    block_of = {x: i for i, b in enumerate(partition) for x in b}
    edges = {_norm_edge(block_of[u], block_of[v]) for u, v in H.edges}
    if any(u == v for u, v in edges):
        raise ValueError("identification creates a self-loop; choose another matching")
    top = max(S.color_set) + 1 if S.color_set else 0
    colors = list(S.vertex_colors) + [top + i for i in range(len(rest))]
    T = ColoredGraph(tuple(colors), tuple(colors), frozenset(edges))
    witness = QuotientWitness(tuple(partition), {a: a for a in range(S.n)})
    assert is_colorful_subgraph(S, T)
    return T, witness
